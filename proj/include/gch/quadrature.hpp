#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "error.hpp"
#include "series.hpp"

namespace gch {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1] by Newton iteration on P_n from Chebyshev guesses.
inline GaussRule gauss_legendre(int n) {
    if (n < 1) throw PreconditionError("nodes", "n >= 1", "gauss_legendre needs at least one node");
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) { p1 = x; p0 = 1.0; }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        if (n == 1) { p1 = x; p0 = 1.0; }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

namespace detail {

inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
};

template <class F>
Panel gk15(F& f, double a, double b, long& evals) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    KahanSum k, g;
    k += kWgk[7] * fc;
    g += kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double dx = h * kXgk[j];
        double f1 = f(c - dx), f2 = f(c + dx);
        k += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) g += kWg[j / 2] * (f1 + f2);
    }
    evals += 15;
    double kv = k.value() * h, gv = g.value() * h;
    return {a, b, kv, std::fabs(kv - gv)};
}

} // namespace detail

// Globally adaptive Gauss-Kronrod (7/15) on a finite interval. The panel with
// the largest error is bisected first; ties go to the leftmost, so results are
// reproducible.
template <class F>
QuadratureResult integrate_interval(F&& f, double a, double b, double abs_tol = 1e-14, double rel_tol = 1e-13,
                                    int max_panels = 4000) {
    QuadratureResult out;
    if (a == b) { out.evaluations = 1; return out; }
    std::vector<detail::Panel> panels{detail::gk15(f, a, b, out.evaluations)};
    auto totals = [&](double& v, double& e) {
        KahanSum sv, se;
        for (auto& p : panels) { sv += p.value; se += p.error; }
        v = sv.value();
        e = se.value();
    };
    double v = 0.0, e = 0.0;
    totals(v, e);
    while (e > std::max(abs_tol, rel_tol * std::fabs(v))) {
        if (static_cast<int>(panels.size()) >= max_panels)
            throw ToleranceError("adaptive quadrature exhausted its panel budget", v, e);
        auto worst = std::max_element(panels.begin(), panels.end(),
                                      [](const auto& x, const auto& y) { return x.error < y.error; });
        double m = 0.5 * (worst->a + worst->b);
        auto left = detail::gk15(f, worst->a, m, out.evaluations);
        auto right = detail::gk15(f, m, worst->b, out.evaluations);
        *worst = left;
        panels.push_back(right);
        std::sort(panels.begin(), panels.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
        totals(v, e);
    }
    out.value = v;
    out.abs_error_estimate = e;
    return out;
}

// Double-exponential rule for (0, inf): x = exp(pi/2 sinh t). Each level halves
// the step; the change between levels is the error estimate. `log_weight`
// lets the caller skip nodes whose weight underflows without evaluating f.
template <class F>
QuadratureResult exp_sinh(F&& f, double rel_tol, double abs_tol = 0.0, int max_level = 10) {
    constexpr double t_max = 6.5;
    constexpr double half_pi = std::numbers::pi / 2.0;
    QuadratureResult out;
    KahanSum sum, l1;
    auto node = [&](double t) {
        double s = half_pi * std::sinh(t);
        double x = std::exp(s);
        double w = x * half_pi * std::cosh(t);
        double fx = f(x);
        ++out.evaluations;
        double v = w * fx;
        if (std::isfinite(v)) {
            sum += v;
            l1 += std::fabs(v);
        }
    };
    double h = 1.0;
    for (double t = -t_max; t <= t_max + 1e-12; t += h) node(t);
    double prev = sum.value() * h;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        int m = static_cast<int>(std::lround(2.0 * t_max / h));
        for (int k = 1; k < m; k += 2) node(-t_max + k * h);
        double cur = sum.value() * h;
        double err = std::fabs(cur - prev);
        prev = cur;
        if (level >= 3 && err <= std::max(abs_tol, rel_tol * l1.value() * h)) {
            out.value = cur;
            out.abs_error_estimate = err;
            return out;
        }
        out.abs_error_estimate = err;
    }
    throw ToleranceError("exp-sinh quadrature did not converge", prev, out.abs_error_estimate);
}

// Integral over [0, inf) of x^nu exp(mu x^2/2 + eps x) f(x). Substituting
// u = |mu| x^2 / 2 turns the Gaussian into exp(-u); nodes where the weight is
// below 1e-300 are dropped. Convergence is judged relative to the L1 norm of
// the integrand.
template <class F>
QuadratureResult integrate_halfline(F&& f, double nu, double mu, double eps, double tol = 1e-13) {
    if (!(mu < 0.0)) throw DomainError("mu", "mu < 0", "integrate_halfline needs a decaying Gaussian weight");
    if (!(nu > -1.0)) throw DomainError("nu", "nu > -1", "weight x^nu is not integrable at 0");
    const double am = -mu;
    const double log_pref = 0.5 * nu * std::log(2.0 / am) - 0.5 * std::log(2.0 * am);
    const double ue = 0.5 * (nu - 1.0);
    auto integrand = [&](double u) -> double {
        double x = std::sqrt(2.0 * u / am);
        double lw = log_pref + ue * std::log(u) - u + eps * x;
        if (lw < -690.0) return 0.0;
        return std::exp(lw) * f(x);
    };
    return exp_sinh(integrand, tol, 0.0);
}

struct AxisPoint {
    double t;          // coordinate in [0, 1]
    double one_minus;  // 1 - t computed without cancellation
};

struct AxisMap {
    enum class Kind { identity, sin_squared, power } kind = Kind::identity;
    double beta = 0.0;  // exponent of t^beta absorbed by the power map

    static AxisMap identity() { return {}; }
    static AxisMap sin_squared() { return {Kind::sin_squared, 0.0}; }
    static AxisMap power(double b) { return {Kind::power, b}; }
};

namespace detail {

struct AxisNodes {
    std::vector<AxisPoint> pts;
    std::vector<double> w;
};

inline AxisNodes map_axis(const GaussRule& g, const AxisMap& m) {
    AxisNodes a;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        double xi = g.nodes[i], wi = g.weights[i];
        switch (m.kind) {
        case AxisMap::Kind::identity:
            a.pts.push_back({0.5 * (1.0 + xi), 0.5 * (1.0 - xi)});
            a.w.push_back(0.5 * wi);
            break;
        case AxisMap::Kind::sin_squared: {
            double th = 0.25 * std::numbers::pi * (1.0 + xi);
            double s = std::sin(th), c = std::cos(th);
            a.pts.push_back({s * s, c * c});
            a.w.push_back(0.25 * std::numbers::pi * wi * 2.0 * s * c);
            break;
        }
        case AxisMap::Kind::power: {
            double s = 0.5 * (1.0 + xi);
            double q = 1.0 / (m.beta + 1.0);
            double t = std::pow(s, q);
            a.pts.push_back({t, 1.0 - t});
            a.w.push_back(0.5 * wi * q * std::pow(s, q - 1.0));
            break;
        }
        }
    }
    return a;
}

template <class F>
double cube_sum(F& f, int d, int n, const std::array<AxisMap, 3>& maps, long& evals) {
    auto g = gauss_legendre(n);
    std::array<AxisNodes, 3> ax;
    for (int k = 0; k < d; ++k) ax[k] = map_axis(g, maps[k]);
    std::array<AxisPoint, 3> p{AxisPoint{0.0, 1.0}, AxisPoint{0.0, 1.0}, AxisPoint{0.0, 1.0}};
    KahanSum total;
    int n1 = d > 1 ? n : 1, n2 = d > 2 ? n : 1;
    for (int i = 0; i < n; ++i) {
        p[0] = ax[0].pts[i];
        for (int j = 0; j < n1; ++j) {
            double wij = ax[0].w[i];
            if (d > 1) { p[1] = ax[1].pts[j]; wij *= ax[1].w[j]; }
            for (int k = 0; k < n2; ++k) {
                double w = wij;
                if (d > 2) { p[2] = ax[2].pts[k]; w *= ax[2].w[k]; }
                total += w * f(p);
                ++evals;
            }
        }
    }
    return total.value();
}

} // namespace detail

// Tensor Gauss-Legendre over [0,1]^d; endpoint singularities are removed by
// the per-axis maps. The error estimate compares against half the node count.
template <class F>
QuadratureResult integrate_cube(F&& f, int d, int nodes_per_axis = 48,
                                std::array<AxisMap, 3> maps = {AxisMap::identity(), AxisMap::identity(),
                                                               AxisMap::identity()}) {
    if (d < 1 || d > 3) throw PreconditionError("d", "1 <= d <= 3", "integrate_cube supports 1 to 3 dimensions");
    if (nodes_per_axis < 2) throw PreconditionError("nodes_per_axis", ">= 2", "integrate_cube needs at least 2 nodes");
    QuadratureResult out;
    double fine = detail::cube_sum(f, d, nodes_per_axis, maps, out.evaluations);
    double coarse = detail::cube_sum(f, d, std::max(2, nodes_per_axis / 2), maps, out.evaluations);
    out.value = fine;
    out.abs_error_estimate = std::fabs(fine - coarse) + 64.0 * 2.2e-16 * std::fabs(fine);
    return out;
}

} // namespace gch
