#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "error.hpp"
#include "quadrature.hpp"
#include "series.hpp"

namespace gch {

inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }
inline bool is_integer(double x) { return std::isfinite(x) && x == std::nearbyint(x); }

struct SignedLog {
    double log_abs;
    int sign;
};

// ln|Gamma(x)| and sign(Gamma(x)). lgamma_r is reentrant, unlike lgamma's signgam.
inline SignedLog log_gamma_signed(double x) {
    if (is_nonpositive_integer(x)) throw PoleError("x", "gamma pole at x = " + std::to_string(x));
    int s = 1;
    double v = ::lgamma_r(x, &s);
    return {v, s};
}

inline double log_gamma(double x) { return log_gamma_signed(x).log_abs; }

inline double gamma_fn(double x) {
    auto g = log_gamma_signed(x);
    return g.sign * std::exp(g.log_abs);
}

// Gamma(a)/Gamma(b) through a log difference. 1/Gamma at a pole of b is 0.
inline double gamma_ratio(double a, double b) {
    if (is_nonpositive_integer(b)) {
        if (is_nonpositive_integer(a)) throw PoleError("a", "gamma ratio with poles in numerator and denominator");
        return 0.0;
    }
    auto ga = log_gamma_signed(a);
    auto gb = log_gamma_signed(b);
    return ga.sign * gb.sign * std::exp(ga.log_abs - gb.log_abs);
}

inline double rgamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    auto g = log_gamma_signed(x);
    return g.sign * std::exp(-g.log_abs);
}

inline double pochhammer(double x, int n) {
    if (n < 0) throw PreconditionError("n", "n >= 0", "pochhammer needs a non-negative count");
    if (is_nonpositive_integer(x)) {
        if (n > -x) return 0.0;
        double p = 1.0;
        for (int k = 0; k < n; ++k) p *= x + k;
        return p;
    }
    if (n <= 30) {
        double p = 1.0;
        for (int k = 0; k < n; ++k) p *= x + k;
        return p;
    }
    return gamma_ratio(x + n, x);
}

inline double factorial(int n) { return pochhammer(1.0, n); }

// Symmetric in (p, q) bit for bit: the two log-gammas are added in a fixed order.
inline double beta(double p, double q) {
    if (is_nonpositive_integer(p)) throw PoleError("p", "beta pole at p = " + std::to_string(p));
    if (is_nonpositive_integer(q)) throw PoleError("q", "beta pole at q = " + std::to_string(q));
    double lo = std::fmin(p, q), hi = std::fmax(p, q);
    if (is_nonpositive_integer(lo + hi)) return 0.0;
    auto a = log_gamma_signed(lo), b = log_gamma_signed(hi), c = log_gamma_signed(lo + hi);
    return a.sign * b.sign * c.sign * std::exp((a.log_abs + b.log_abs) - c.log_abs);
}

// Generalized Laguerre L_n^(k)(z) summed from the j = 0 term (n+k choose n).
inline double assoc_laguerre(int n, double k, double z) {
    if (n < 0) throw PreconditionError("n", "n >= 0", "Laguerre degree must be non-negative");
    double t = 1.0;
    for (int j = 1; j <= n; ++j) t *= (k + j) / j;
    KahanSum s(t);
    for (int j = 0; j < n; ++j) {
        t *= -(n - j) * z / ((k + j + 1.0) * (j + 1.0));
        s += t;
    }
    return s.value();
}

inline double laguerre(int n, double z) { return assoc_laguerre(n, 0.0, z); }

inline double kummer_m(double a, double b, double z, const SeriesControl& ctl = {}) {
    bool terminating = is_nonpositive_integer(a);
    if (is_nonpositive_integer(b) && !(terminating && -a < -b))
        throw PoleError("b", "Kummer M undefined for b = " + std::to_string(b));
    double t = 1.0;
    KahanSum s(1.0);
    if (terminating) {
        int m = static_cast<int>(-a);
        for (int n = 0; n < m; ++n) {
            t *= (a + n) * z / ((b + n) * (n + 1.0));
            s += t;
        }
        return s.value();
    }
    StopRule stop(ctl);
    for (int n = 0; n < ctl.max_terms; ++n) {
        t *= (a + n) * z / ((b + n) * (n + 1.0));
        s += t;
        if (stop.small(t, s.value())) return s.value();
    }
    throw ConvergenceError("Kummer M series did not converge", s.value(), ctl.max_terms);
}

namespace detail {

inline double kummer_u_integral(double a, double b, double z) {
    const double lg = log_gamma(a);
    auto f = [&](double t) {
        double l = -z * t + (a - 1.0) * std::log(t) + (b - a - 1.0) * std::log1p(t) - lg;
        return l < -745.0 ? 0.0 : std::exp(l);
    };
    return exp_sinh(f, 1e-15, 0.0, 12).value;
}

} // namespace detail

// Two-M combination where it is well conditioned; otherwise the Laplace integral.
inline double kummer_u(double a, double b, double z, const SeriesControl& ctl = {}) {
    if (!(z > 0.0)) throw DomainError("z", "z > 0", "Kummer U needs a positive argument");
    if (is_nonpositive_integer(a) && !is_nonpositive_integer(b)) {
        int m = static_cast<int>(-a);
        double s = (m % 2 == 0 ? 1.0 : -1.0) * pochhammer(b, m);
        return s * kummer_m(a, b, z, ctl);
    }
    bool two_m_ok = !is_integer(b);
    if (two_m_ok && (z <= 10.0 || !(a > 0.0))) {
        double t1 = gamma_ratio(1.0 - b, a - b + 1.0) * kummer_m(a, b, z, ctl);
        double t2 = gamma_ratio(b - 1.0, a) * std::pow(z, 1.0 - b) * kummer_m(a - b + 1.0, 2.0 - b, z, ctl);
        return t1 + t2;
    }
    if (a > 0.0) return detail::kummer_u_integral(a, b, z);
    throw UnsupportedError("a", "a > 0 or non-integer b",
                           "Kummer U: neither the two-M form nor the integral applies");
}

inline double gauss_2f1(double a, double b, double c, double z, const SeriesControl& ctl = {}) {
    int stop_at = -1;
    if (is_nonpositive_integer(a)) stop_at = static_cast<int>(-a);
    if (is_nonpositive_integer(b)) {
        int m = static_cast<int>(-b);
        stop_at = stop_at < 0 ? m : std::min(stop_at, m);
    }
    if (is_nonpositive_integer(c) && !(stop_at >= 0 && stop_at < -c))
        throw PoleError("c", "2F1 undefined for c = " + std::to_string(c));
    double t = 1.0;
    KahanSum s(1.0);
    if (stop_at >= 0) {
        for (int k = 0; k < stop_at; ++k) {
            t *= (a + k) * (b + k) * z / ((c + k) * (k + 1.0));
            s += t;
        }
        return s.value();
    }
    if (std::fabs(z) >= 1.0) throw DivergenceError("z", "2F1 series diverges for |z| >= 1");
    StopRule stop(ctl);
    for (int k = 0; k < ctl.max_terms; ++k) {
        t *= (a + k) * (b + k) * z / ((c + k) * (k + 1.0));
        s += t;
        if (stop.small(t, s.value())) return s.value();
    }
    throw ConvergenceError("2F1 series did not converge", s.value(), ctl.max_terms);
}

// Appell F1 as a single sum of 2F1 terms over the y index. When one of beta,
// beta' is a non-positive integer that index is the outer one, so the outer
// sum is finite and the matching argument may exceed 1.
inline double appell_f1(double alpha, double b, double bp, double c, double x, double y,
                        const SeriesControl& ctl = {}) {
    if (is_nonpositive_integer(b) && !is_nonpositive_integer(bp)) {
        std::swap(b, bp);
        std::swap(x, y);
    }
    bool finite = is_nonpositive_integer(bp);
    int kmax = finite ? static_cast<int>(-bp) : ctl.max_terms;
    if (!finite && std::fabs(y) >= 1.0) throw DivergenceError("y", "Appell F1 series diverges for |y| >= 1");
    double coef = 1.0;
    KahanSum s;
    StopRule stop(ctl);
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) coef *= (alpha + k - 1) * (bp + k - 1) * y / ((c + k - 1) * k);
        double term = coef == 0.0 ? 0.0 : coef * gauss_2f1(alpha + k, b, c + k, x, ctl);
        s += term;
        if (!finite && stop.small(term, s.value())) return s.value();
    }
    if (!finite) throw ConvergenceError("Appell F1 outer series did not converge", s.value(), ctl.max_terms);
    return s.value();
}

enum class AdditionVariant { A, B };

// Series forms of M(a, b, x + y) expanded about x.
inline double kummer_addition(double a, double b, double x, double y, AdditionVariant v,
                              const SeriesControl& ctl = {}) {
    double coef = 1.0;
    KahanSum s;
    StopRule stop(ctl);
    for (int n = 0; n < ctl.max_terms; ++n) {
        if (n > 0) {
            if (v == AdditionVariant::A)
                coef *= (a + n - 1) * y / ((b + n - 1) * n);
            else
                coef *= (b - a + n - 1) * (-y) / ((b + n - 1) * n);
        }
        if (coef == 0.0) break;
        double m = v == AdditionVariant::A ? kummer_m(a + n, b + n, x, ctl) : kummer_m(a, b + n, x, ctl);
        double term = coef * m;
        s += term;
        if (stop.small(term, s.value())) break;
        if (n + 1 == ctl.max_terms) throw ConvergenceError("addition series did not converge", s.value(), n + 1);
    }
    return v == AdditionVariant::A ? s.value() : std::exp(y) * s.value();
}

inline double erf_fn(double x) { return std::erf(x); }

} // namespace gch
