#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "functions.hpp"
#include "quadrature.hpp"
#include "special.hpp"

namespace gch {

struct OrthoReport {
    TerminationSpec a;
    TerminationSpec b;
    double integral = 0.0;
    double predicted = 0.0;
    double abs_deviation = 0.0;
    double tolerance_used = 0.0;
    bool pass = false;
    // Pairs sharing alpha0 coincide at eps = 0, so no vanishing is claimed for them.
    bool informational = false;
    double quadrature_error = 0.0;
    // Exact first-order norm from the moments, for comparison with `predicted`.
    double diagnostic = std::numeric_limits<double>::quiet_NaN();
};

// Integral of x^nu exp(mu x^2/2 + eps x) f(x) over [0, inf).
template <class F>
QuadratureResult weighted_integral(F&& f, const GchParams& p, double tol = 1e-14) {
    return integrate_halfline(std::forward<F>(f), p.nu(), p.mu(), p.eps(), tol);
}

struct NormPrediction {
    double eps0 = 0.0;      // 2^(gamma-1)|mu|^-gamma alpha0! Gamma(alpha0+gamma)
    double eps1 = 0.0;      // coefficient of eps in the closed-form first-order norm
    double total(double eps) const { return eps0 + eps * eps1; }
};

// The closed-form diagonal norm through first order in eps.
inline NormPrediction norm_prediction(const TerminationSpec& a, const GchParams& p) {
    const double g = p.gamma(), am = std::fabs(p.mu());
    const int a0 = a.alpha0, a1 = a.alpha1;
    NormPrediction r;
    r.eps0 = std::exp((g - 1.0) * std::log(2.0) - g * std::log(am) + log_gamma(a0 + 1.0) + log_gamma(a0 + g));
    auto lg1 = log_gamma_signed(a0 + g - 0.5), lg2 = log_gamma_signed(a0 + g + 0.5), lg3 = log_gamma_signed(g - 0.5);
    double first = lg1.sign * lg2.sign * lg3.sign * std::exp(lg1.log_abs + lg2.log_abs - lg3.log_abs);
    double gc = gamma_ratio(a0 + g, g);
    KahanSum sum;
    double fn = 1.0;
    for (int n = 0; n <= a0; ++n) {
        if (n > 0) fn *= (n - 1.0 - a0) / (n * (g + n - 1.0));
        auto ga = log_gamma_signed(n + 0.5), gb = log_gamma_signed(n + g - 0.5);
        for (int k = 0; k <= a1 - n; ++k) {
            auto gd = log_gamma_signed(k + n + 1.5 - a0);
            double ratio = ga.sign * gb.sign * gd.sign * std::exp(ga.log_abs + gb.log_abs - gd.log_abs);
            sum += fn * (n + 0.5 * p.omega()) * ratio * pochhammer(n - static_cast<double>(a1), k) / 2.0;
        }
    }
    double sign = a0 % 2 == 0 ? 1.0 : -1.0;
    double scale = std::exp((g - 0.5) * std::log(2.0) - (g + 0.5) * std::log(am));
    r.eps1 = sign * scale * (first - gc * sum.value());
    return r;
}

// N0 + eps * (moment of x F^2 minus moment of x F Pi), both at eps = 0.
inline double norm_first_order_exact(const TerminationSpec& a, const GchParams& p) {
    GchParams p0 = p.with_eps(0.0);
    double g = p.gamma();
    auto F = [&](double x) { return f_poly(a.alpha0, g, -0.5 * p.mu() * x * x); };
    auto Pi = [&](double x) { return pi_series(a.alpha0, a.alpha1, g, p.omega(), -0.5 * p.mu() * x * x); };
    double n0 = weighted_integral([&](double x) { double f = F(x); return f * f; }, p0).value;
    double m1 = weighted_integral([&](double x) { double f = F(x); return x * f * f; }, p0).value;
    double m2 = weighted_integral([&](double x) { return x * F(x) * Pi(x); }, p0).value;
    return n0 + p.eps() * (m1 - m2);
}

inline double qw_product_integral(const TerminationSpec& a, const TerminationSpec& b, const GchParams& p,
                                  double* err = nullptr) {
    auto r = weighted_integral([&](double x) { return qw(a, p, x).value * qw(b, p, x).value; }, p);
    if (err) *err = r.abs_error_estimate;
    return r.value;
}

inline OrthoReport diagonal_norm(const TerminationSpec& a, const GchParams& p) {
    if (!(p.mu() < 0.0)) throw DomainError("mu", "mu < 0", "norm needs mu < 0");
    OrthoReport r;
    r.a = r.b = a;
    r.integral = qw_product_integral(a, a, p, &r.quadrature_error);
    r.predicted = norm_prediction(a, p).total(p.eps());
    r.abs_deviation = std::fabs(r.integral - r.predicted);
    r.tolerance_used = std::fmax(1e-8, 10.0 * p.eps() * p.eps()) * std::fabs(r.predicted);
    r.pass = r.abs_deviation <= r.tolerance_used;
    r.diagnostic = norm_first_order_exact(a, p);
    return r;
}

inline OrthoReport cross_integral(const TerminationSpec& a, const TerminationSpec& b, const GchParams& p) {
    if (a == b) return diagonal_norm(a, p);
    if (!(p.mu() < 0.0)) throw DomainError("mu", "mu < 0", "cross integral needs mu < 0");
    OrthoReport r;
    r.a = a;
    r.b = b;
    r.integral = qw_product_integral(a, b, p, &r.quadrature_error);
    double na = qw_product_integral(a, a, p), nb = qw_product_integral(b, b, p);
    r.predicted = 0.0;
    r.abs_deviation = std::fabs(r.integral);
    r.tolerance_used = std::fmax(1e-9, 50.0 * p.eps() * p.eps()) * std::sqrt(std::fabs(na * nb));
    r.pass = r.abs_deviation <= r.tolerance_used;
    r.informational = a.alpha0 == b.alpha0;
    return r;
}

struct Expansion {
    struct Row {
        TerminationSpec q;
        double coefficient;
    };
    std::vector<Row> rows;
    GchParams params;
    bool decay_warning = false;

    double reconstruct(double x) const {
        KahanSum s;
        for (const auto& r : rows) s += r.coefficient * qw(r.q, params, x).value;
        return s.value();
    }
};

// Coefficients from the projection integral divided by the closed-form norm.
inline Expansion expand_function(const std::function<double(double)>& psi, int max_alpha0, int max_alpha1,
                                 const GchParams& p) {
    if (max_alpha0 < 0 || max_alpha1 < max_alpha0)
        throw PreconditionError("cap", "0 <= max_alpha0 <= max_alpha1", "invalid expansion cap");
    Expansion e;
    e.params = p;
    for (int a0 = 0; a0 <= max_alpha0; ++a0) {
        for (int a1 = a0; a1 <= max_alpha1; ++a1) {
            TerminationSpec q(a0, a1);
            double proj = weighted_integral([&](double x) { return qw(q, p, x).value * psi(x); }, p).value;
            e.rows.push_back({q, proj / norm_prediction(q, p).total(p.eps())});
        }
    }
    double xt = std::sqrt(80.0 / std::fabs(p.mu()));
    double tail = std::fabs(psi(xt)) * std::exp(p.nu() * std::log(xt) + 0.5 * p.mu() * xt * xt + p.eps() * xt);
    e.decay_warning = !(tail < 1e-8);
    return e;
}

} // namespace gch
