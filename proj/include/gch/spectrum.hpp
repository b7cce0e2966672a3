#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "functions.hpp"
#include "params.hpp"
#include "special.hpp"

namespace gch {

struct PhysicsParams {
    double m = 0.0;
    double b = 1.0;
    int l = 0;

    void validate() const {
        if (!(b > 0.0)) throw DomainError("b", "b > 0", "string tension must be positive");
        if (!(m >= 0.0)) throw DomainError("m", "m >= 0", "quark mass must be non-negative");
        if (l < 0) throw DomainError("l", "l >= 0", "angular momentum must be non-negative");
    }
    bool perturbative_warning() const { return !(2.0 * m / std::sqrt(b) < 0.2); }
};

struct QuantumNumbers {
    int l = 0;
    int order_i = 0;
    std::vector<int> n;  // n_0 .. n_i, non-decreasing, each >= 1

    void validate() const {
        if (static_cast<int>(n.size()) != order_i + 1)
            throw PreconditionError("n", "size = order_i + 1", "one radial number per order");
        for (std::size_t k = 0; k < n.size(); ++k) {
            if (n[k] < 1) throw PreconditionError("n", "n_k >= 1", "radial numbers start at 1");
            if (k > 0 && n[k] < n[k - 1]) throw PreconditionError("n", "n_i <= n_j for i <= j", "radial numbers must not decrease");
        }
    }
};

struct SpectrumEntry {
    QuantumNumbers qn;
    int order_i = 0;
    double E_squared = 0.0;
    std::string formula_id;
};

inline GchParams map_physics_to_ode(const PhysicsParams& pp, double E_squared) {
    pp.validate();
    double l = pp.l;
    return GchParams(-pp.b, -2.0 * pp.m, 2.0 * (l + 1.0), E_squared / 4.0 - pp.b * (l + 1.5));
}

// E_i^2 = 4b (l + 2 n_i + (2i - 1)/2): -1/2, +1/2, +3/2, ... by order.
inline double energy_level(double b, int l, int order_i, int n_i) {
    if (order_i < 0) throw PreconditionError("order_i", "order_i >= 0", "order must be non-negative");
    if (n_i < 1) throw PreconditionError("n_i", "n_i >= 1", "radial number starts at 1");
    return 4.0 * b * (l + 2.0 * n_i + (2.0 * order_i - 1.0) / 2.0);
}

inline std::string formula_label(int order_i) { return "level-" + std::to_string(order_i); }

inline std::vector<SpectrumEntry> enumerate_spectrum(const PhysicsParams& pp, int order_cap, int n_cap, int l_min,
                                                     int l_max) {
    if (!(pp.b > 0.0)) throw DomainError("b", "b > 0", "string tension must be positive");
    std::vector<SpectrumEntry> out;
    if (order_cap < 0 || n_cap < 1 || l_max < l_min) return out;
    for (int l = std::max(0, l_min); l <= l_max; ++l) {
        for (int i = 0; i <= order_cap; ++i) {
            std::vector<int> t(i + 1, 1);
            while (true) {
                SpectrumEntry e;
                e.qn = {l, i, t};
                e.order_i = i;
                e.E_squared = energy_level(pp.b, l, i, t.back());
                e.formula_id = formula_label(i);
                out.push_back(std::move(e));
                // next non-decreasing tuple in lexicographic order
                int k = i;
                while (k >= 0 && t[k] == n_cap) --k;
                if (k < 0) break;
                ++t[k];
                for (int j = k + 1; j <= i; ++j) t[j] = t[k];
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        return std::tie(a.E_squared, a.qn.l, a.order_i, a.qn.n) < std::tie(b.E_squared, b.qn.l, b.order_i, b.qn.n);
    });
    return out;
}

namespace detail {

inline TerminationSpec radial_spec(int n0, int n1) {
    if (n0 < 1 || n1 < 1) throw PreconditionError("n0", "n0, n1 >= 1", "radial numbers start at 1");
    if (n0 > n1) throw PreconditionError("n0", "n0 <= n1", "requires |alpha0| <= |alpha1|");
    return {n0 - 1, n1 - 1};
}

} // namespace detail

// The closed-form normalization constant through first order in m.
inline double normalization_constant(int n0, int n1, const PhysicsParams& pp) {
    pp.validate();
    auto q = detail::radial_spec(n0, n1);
    const int a0 = q.alpha0, a1 = q.alpha1;
    const double g = pp.l + 1.5, b = pp.b;
    double lead = std::exp((g - 1.0) * std::log(2.0) - g * std::log(b) + log_gamma(a0 + 1.0) + log_gamma(a0 + g));
    auto l1 = log_gamma_signed(a0 + g - 0.5), l2 = log_gamma_signed(a0 + g + 0.5), l3 = log_gamma_signed(g - 0.5);
    double first = 2.0 * l1.sign * l2.sign * l3.sign * std::exp(l1.log_abs + l2.log_abs - l3.log_abs);
    KahanSum sum;
    double gc = gamma_ratio(a0 + g, g);
    double fn = 1.0;  // (-a0)_n / ((g)_n n!)
    for (int n = 0; n <= a0; ++n) {
        if (n > 0) fn *= (n - 1.0 - a0) / (n * (g + n - 1.0));
        double gn = gamma_fn(g + n - 0.5);
        for (int k = 0; k <= a1 - n; ++k) {
            double r = rgamma(k + n - a0 + 0.5);
            sum += (n + 0.5 * (g - 0.5)) * gc * gn * fn * pochhammer(n - static_cast<double>(a1), k) * r;
        }
    }
    double sign = a0 % 2 == 0 ? 1.0 : -1.0;
    double corr = pp.m * sign * std::exp((g - 0.5) * std::log(2.0) - (g + 0.5) * std::log(b)) * (first - sum.value());
    double bracket = lead - corr;
    if (!(bracket > 0.0)) throw DomainError("m", "positive norm bracket", "normalization bracket is not positive");
    return 1.0 / std::sqrt(bracket);
}

inline double radial_wavefunction_unnormalized(double r, int n0, int n1, const PhysicsParams& pp) {
    pp.validate();
    if (r < 0.0) throw DomainError("r", "r >= 0", "radius must be non-negative");
    auto q = detail::radial_spec(n0, n1);
    GchParams p = map_physics_to_ode(pp, energy_level(pp.b, pp.l, 0, n0));
    double shift = r + 2.0 * pp.m / pp.b;
    double rl = pp.l == 0 ? 1.0 : std::pow(r, pp.l);
    return std::exp(-0.25 * pp.b * shift * shift) * rl * qw(q, p, r).value;
}

inline double radial_wavefunction(double r, int n0, int n1, const PhysicsParams& pp) {
    return normalization_constant(n0, n1, pp) * radial_wavefunction_unnormalized(r, n0, n1, pp);
}

} // namespace gch
