#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "functions.hpp"
#include "quadrature.hpp"
#include "special.hpp"

namespace gch {

// Generating-function values split as value = term_a - (eps/2) x term_b.
struct GenFuncValue {
    double value = 0.0;
    double term_a = 0.0;
    double term_b = 0.0;
    double error = 0.0;  // tail bound or quadrature estimate on value
    int terms = 0;
};

namespace detail {

inline void check_v(double v0, double v1) {
    if (!(std::fabs(v0) < 1.0)) throw DomainError("v0", "|v0| < 1", "generating function needs |v0| < 1");
    if (!(std::fabs(v1) < 1.0)) throw DomainError("v1", "|v1| < 1", "generating function needs |v1| < 1");
}

inline double x_of_z(double z, const GchParams& p) { return std::sqrt(2.0 * z / std::fabs(p.mu())); }

} // namespace detail

// Direct weighted sum of first-kind polynomials over alpha0 <= alpha1.
inline GenFuncValue genfunc_lhs(double v0, double v1, double z, const GchParams& p, const SeriesControl& ctl = {}) {
    detail::check_v(v0, v1);
    if (!(p.mu() < 0.0)) throw DomainError("mu", "mu < 0", "generating function needs mu < 0");
    const double g = p.gamma(), x = detail::x_of_z(z, p);
    const double r = std::fabs(v0);
    const double tol = std::fmax(ctl.abs_tol, 1e-18);
    KahanSum sa, sb;
    double tail = 0.0;
    int terms = 0, quiet_rows = 0;
    for (int a0 = 0; a0 < ctl.max_terms; ++a0) {
        double row_max = 0.0, last = 0.0;
        int quiet = 0;
        for (int a1 = a0;; ++a1) {
            if (a1 - a0 >= ctl.max_terms)
                throw ConvergenceError("generating-function row did not converge", sa.value(), terms);
            double c = beta(a1 + 1.0, 0.5) * std::pow(v0, a1) * std::pow(v1, a0) * rgamma(a0 + 1.0);
            double fa = c * f_poly(a0, g, z);
            double fb = c * pi_series(a0, a1, g, p.omega(), z);
            sa += fa;
            sb += fb;
            ++terms;
            double mag = std::fmax(std::fabs(fa), std::fabs(fb) * std::fmax(1.0, x));
            row_max = std::fmax(row_max, mag);
            last = mag;
            quiet = (mag < tol || c == 0.0) ? quiet + 1 : 0;
            if (quiet >= 2) break;
        }
        tail += last * r / (1.0 - r);
        quiet_rows = row_max < tol ? quiet_rows + 1 : 0;
        if (quiet_rows >= 2) break;
    }
    GenFuncValue out;
    out.term_a = sa.value();
    out.term_b = sb.value();
    out.value = out.term_a - 0.5 * p.eps() * x * out.term_b;
    out.error = tail;
    out.terms = terms;
    return out;
}

// Real-integral form: a 1-D integral for term A and a 3-D integral for term B.
inline GenFuncValue genfunc_rhs_integral(double v0, double v1, double z, const GchParams& p, int nodes = 48) {
    detail::check_v(v0, v1);
    if (!(p.mu() < 0.0)) throw DomainError("mu", "mu < 0", "generating function needs mu < 0");
    const double g = p.gamma(), x = detail::x_of_z(z, p), w = p.omega();
    const double a = v0 * v1;
    auto fa = [&](const std::array<AxisPoint, 3>& q) {
        double t = q[0].t;
        return std::pow(q[0].one_minus, -0.5) / (1.0 - v0 * t) * std::pow(1.0 - a * t, -g) *
               std::exp(-z * a * t / (1.0 - a * t));
    };
    auto A = integrate_cube(fa, 1, nodes, {AxisMap::sin_squared(), AxisMap::identity(), AxisMap::identity()});
    GenFuncValue out;
    out.term_a = A.value;
    double errB = 0.0;
    {
        auto fb = [&](const std::array<AxisPoint, 3>& q) {
            double u = q[0].t, omu = q[0].one_minus;
            double t = q[1].t, pp = q[2].t, omp = q[2].one_minus;
            double brace = 0.5 * w - z * pp * t * omu * a / ((1.0 - v1) * (1.0 - u * v1));
            double expo = -z * pp * v0 / (1.0 - u * v0) * (u - t * (u - v1) / (1.0 - v1));
            return std::pow(omu, -0.5) / (1.0 - v0 * u) * std::pow(t, g - 1.5) * std::pow(omp, -0.5) * brace *
                   std::exp(expo);
        };
        auto B = integrate_cube(fb, 3, nodes,
                                {AxisMap::sin_squared(), AxisMap::power(g - 1.5), AxisMap::sin_squared()});
        double pre = std::pow(1.0 - v1, -g);
        out.term_b = pre * B.value;
        errB = pre * B.abs_error_estimate;
    }
    out.value = out.term_a - 0.5 * p.eps() * x * out.term_b;
    out.error = A.abs_error_estimate + 0.5 * std::fabs(p.eps()) * x * errB;
    return out;
}

// Term A as the closed-form triple series in (n, m, j).
inline double genfunc_term_a_triple(double v0, double v1, double z, double g, const SeriesControl& ctl = {}) {
    KahanSum total;
    StopRule stop_n(ctl);
    double zn = 1.0;  // (-z)^n / n!
    for (int n = 0; n < ctl.max_terms; ++n) {
        if (n > 0) zn *= -z / n;
        KahanSum row_n;
        StopRule stop_m(ctl);
        double cm = 1.0;  // (g+n)_m / m! (v0 v1)^m
        for (int m = 0; m < ctl.max_terms; ++m) {
            if (m > 0) cm *= (g + n + m - 1.0) * v0 * v1 / m;
            KahanSum row_m;
            StopRule stop_j(ctl);
            double vj = 1.0;
            for (int j = 0; j < ctl.max_terms; ++j) {
                if (j > 0) vj *= v0;
                double t = beta(n + m + j + 1.0, 0.5) * vj;
                row_m += t;
                if (stop_j.small(t, row_m.value())) break;
            }
            double t = cm * row_m.value();
            row_n += t;
            if (stop_m.small(t, row_n.value())) break;
        }
        double t = zn * std::pow(v0 * v1, n) * row_n.value();
        total += t;
        if (stop_n.small(t, total.value())) return total.value();
    }
    throw ConvergenceError("triple series for term A did not converge", total.value(), ctl.max_terms);
}

// Term A through Appell F1.
inline double genfunc_term_a_appell(double v0, double v1, double z, double g, const SeriesControl& ctl = {}) {
    KahanSum total;
    StopRule stop(ctl);
    const double sq = std::sqrt(std::numbers::pi);
    for (int n = 0; n < ctl.max_terms; ++n) {
        double c = sq * std::pow(-z * v0 * v1, n) * rgamma(n + 1.5);
        double t = c * appell_f1(n + 1.0, 1.0, g + n, n + 1.5, v0, v0 * v1, ctl);
        total += t;
        if (stop.small(t, total.value()) || c == 0.0) return total.value();
    }
    throw ConvergenceError("Appell series for term A did not converge", total.value(), ctl.max_terms);
}

// Term B as the closed-form double series with terminating Appell F1 factors.
inline double genfunc_term_b_series(double v0, double v1, double z, double g, double w,
                                    const SeriesControl& ctl = {}) {
    const double sq = std::sqrt(std::numbers::pi);
    KahanSum total;
    StopRule stop(ctl);
    const int dmax = std::min(ctl.max_terms, 400);
    for (int d = 0; d < dmax; ++d) {
        KahanSum diag;
        for (int n = 0; n <= d; ++n) {
            int m = d - n;
            double zv = z * v0;
            double s1 = (n + m + 1) % 2 == 0 ? 1.0 : -1.0;
            double t1 = s1 * (n + m + 1.0) * sq * (0.5 * sq) * std::pow(1.0 - v1, -(n + g + 1.0)) *
                        std::pow(zv, n + m + 1.0) * std::pow(v1, n + 1.0) /
                        (g + n + 0.5) * rgamma(m + 2.5) * rgamma(n + m + 2.5) *
                        appell_f1(m + 1.0, n + m + 2.0, -static_cast<double>(n), m + 2.5, v0, 1.0 / v1, ctl);
            double s2 = (n + m) % 2 == 0 ? 1.0 : -1.0;
            double t2 = w * s2 * sq * pochhammer(n + 1.0, m) * std::pow(1.0 - v1, -(n + g)) * std::pow(zv, n + m) *
                        std::pow(v1, n) / ((g + n - 0.5) * pochhammer(1.5, n) * pochhammer(n + 1.5, m)) *
                        rgamma(m + 1.5) *
                        appell_f1(m + 1.0, n + m + 1.0, -static_cast<double>(n), m + 1.5, v0, 1.0 / v1, ctl);
            diag += t1 + t2;
        }
        total += diag.value();
        if (stop.small(diag.value(), total.value())) return total.value();
    }
    throw ConvergenceError("double series for term B did not converge", total.value(), dmax);
}

struct GenFuncSeries {
    GenFuncValue v;
    double term_a_triple = 0.0;
};

inline GenFuncSeries genfunc_rhs_series(double v0, double v1, double z, const GchParams& p,
                                        const SeriesControl& ctl = {}) {
    detail::check_v(v0, v1);
    if (!(p.mu() < 0.0)) throw DomainError("mu", "mu < 0", "generating function needs mu < 0");
    const double g = p.gamma(), x = detail::x_of_z(z, p);
    GenFuncSeries s;
    s.v.term_a = genfunc_term_a_appell(v0, v1, z, g, ctl);
    s.term_a_triple = genfunc_term_a_triple(v0, v1, z, g, ctl);
    if (v1 == 0.0) throw UnsupportedError("v1", "v1 != 0", "the term-B series has 1/v1 arguments");
    s.v.term_b = genfunc_term_b_series(v0, v1, z, g, p.omega(), ctl);
    s.v.value = s.v.term_a - 0.5 * p.eps() * x * s.v.term_b;
    s.v.error = 0.0;
    return s;
}

struct GenFuncCheck {
    double v0, v1, z, gamma, eps;
    double lhs, rhs_series, rhs_integral;
    double truncation_tail;
    double integral_error;
    double deviation;  // largest pairwise relative difference
    double threshold;
    bool pass;
};

inline GenFuncCheck genfunc_check(double v0, double v1, double z, const GchParams& p, int nodes = 48) {
    auto l = genfunc_lhs(v0, v1, z, p);
    auto s = genfunc_rhs_series(v0, v1, z, p);
    auto in = genfunc_rhs_integral(v0, v1, z, p, nodes);
    GenFuncCheck c{v0, v1, z, p.gamma(), p.eps(), l.value, s.v.value, in.value, l.error, in.error, 0.0, 0.0, false};
    auto rel = [](double a, double b) { return std::fabs(a - b) / std::fmax(std::fabs(a), std::fabs(b)); };
    c.deviation = std::max({rel(l.value, s.v.value), rel(l.value, in.value), rel(s.v.value, in.value)});
    c.threshold = std::fmax(1e-6, (l.error + in.error) / std::fabs(l.value));
    c.pass = c.deviation <= c.threshold;
    return c;
}

} // namespace gch
