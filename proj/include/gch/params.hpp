#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"

namespace gch {

// Coefficients of x g'' + (mu x^2 + eps x + nu) g' + (Omega x + eps omega) g = 0.
// omega is tied to nu/2; gamma is always derived.
class GchParams {
public:
    GchParams() = default;
    GchParams(double mu, double eps, double nu, double Omega) : mu_(mu), eps_(eps), nu_(nu), Omega_(Omega) {}

    static GchParams with_omega(double mu, double eps, double nu, double omega, double Omega) {
        if (std::fabs(omega - 0.5 * nu) > 1e-12 * std::fmax(1.0, std::fabs(nu)))
            throw UnsupportedError("omega", "omega = nu/2", "only omega = nu/2 is supported");
        return GchParams(mu, eps, nu, Omega);
    }

    double mu() const { return mu_; }
    double eps() const { return eps_; }
    double nu() const { return nu_; }
    double omega() const { return 0.5 * nu_; }
    double Omega() const { return Omega_; }
    double gamma() const { return 0.5 * (1.0 + nu_); }
    bool eps_warning() const { return std::fabs(0.5 * eps_) >= 0.1; }

    GchParams with_eps(double e) const { return {mu_, e, nu_, Omega_}; }
    GchParams with_Omega(double o) const { return {mu_, eps_, nu_, o}; }

    static GchParams from_gamma(double mu, double eps, double gamma, double Omega) {
        return {mu, eps, 2.0 * gamma - 1.0, Omega};
    }

private:
    double mu_ = -1.0;
    double eps_ = 0.0;
    double nu_ = 2.0;
    double Omega_ = 0.0;
};

// Pair of eigennumbers; also used for (psi0, psi1) on the second root.
struct TerminationSpec {
    int alpha0 = 0;
    int alpha1 = 0;

    TerminationSpec() = default;
    TerminationSpec(int a0, int a1) : alpha0(a0), alpha1(a1) {
        if (a0 < 0 || a1 < 0) throw PreconditionError("alpha", "alpha0, alpha1 >= 0", "eigennumbers must be non-negative");
        if (a0 > a1) throw PreconditionError("alpha0", "alpha0 <= alpha1", "eigennumbers require alpha0 <= alpha1");
    }
    friend bool operator==(const TerminationSpec&, const TerminationSpec&) = default;
};

enum class Branch { root0, root1mnu };

inline const char* to_string(Branch b) { return b == Branch::root0 ? "root0" : "root1mnu"; }

struct Eval3 {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

// Truncated Frobenius series x^lambda sum_p (c0_p + eps c1_p) x^p plus an
// optional ln(x) x^lambda sum_p (l0_p + eps l1_p) x^p part. Solutions built
// with the exact recurrence carry everything in order 0 (eps_split = false).
struct SeriesSolution {
    double lambda = 0.0;
    std::array<std::vector<double>, 2> coeffs;
    std::array<std::vector<double>, 2> log_part;
    bool has_log = false;
    bool eps_split = true;
    bool terminated = false;
    int truncated_at = 0;
    double last_magnitude = 0.0;

    double coeff(int order, int power) const {
        const auto& c = coeffs[order];
        return power >= 0 && power < static_cast<int>(c.size()) ? c[power] : 0.0;
    }
    double log_coeff(int order, int power) const {
        const auto& c = log_part[order];
        return power >= 0 && power < static_cast<int>(c.size()) ? c[power] : 0.0;
    }

    // Value and x-derivatives; eps weights the order-1 entries when split.
    Eval3 evaluate(double x, double eps) const {
        if (!(x > 0.0) && (has_log || lambda != std::floor(lambda) || lambda < 0.0))
            throw DomainError("x", "x > 0", "series with log or non-integer exponent needs x > 0");
        double w1 = eps_split ? eps : 0.0;
        auto sum = [&](const std::array<std::vector<double>, 2>& c) {
            Eval3 r;
            std::size_t n = std::max(c[0].size(), c[1].size());
            double v = 0.0, d1 = 0.0, d2 = 0.0;
            double cv = 0.0, c1 = 0.0, c2 = 0.0;  // Neumaier compensation
            auto acc = [](double& s, double& comp, double t) {
                double u = s + t;
                comp += std::fabs(s) >= std::fabs(t) ? (s - u) + t : (t - u) + s;
                s = u;
            };
            for (std::size_t p = 0; p < n; ++p) {
                double a = (p < c[0].size() ? c[0][p] : 0.0) + w1 * (p < c[1].size() ? c[1][p] : 0.0);
                if (a == 0.0) continue;
                double e = static_cast<double>(p) + lambda;
                acc(v, cv, a * std::pow(x, e));
                if (e != 0.0) acc(d1, c1, a * e * std::pow(x, e - 1.0));
                if (e != 0.0 && e != 1.0) acc(d2, c2, a * e * (e - 1.0) * std::pow(x, e - 2.0));
            }
            r.value = v + cv;
            r.d1 = d1 + c1;
            r.d2 = d2 + c2;
            return r;
        };
        Eval3 out = sum(coeffs);
        if (has_log) {
            Eval3 q = sum(log_part);
            double L = std::log(x);
            out.value += L * q.value;
            out.d1 += q.value / x + L * q.d1;
            out.d2 += -q.value / (x * x) + 2.0 * q.d1 / x + L * q.d2;
        }
        return out;
    }
};

// x g'' + (mu x^2 + eps x + nu) g' + (Omega x + eps omega) g, with a scale for
// relative comparisons.
struct Residual {
    double value;
    double scale;
    double relative() const { return std::fabs(value) / std::fmax(1.0, scale); }
};

inline Residual ode_residual(const GchParams& p, double x, const Eval3& g) {
    double t1 = x * g.d2;
    double t2 = (p.mu() * x * x + p.eps() * x + p.nu()) * g.d1;
    double t3 = (p.Omega() * x + p.eps() * p.omega()) * g.value;
    return {t1 + t2 + t3, std::fabs(t1) + std::fabs(t2) + std::fabs(t3)};
}

} // namespace gch
