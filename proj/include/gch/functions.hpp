#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "error.hpp"
#include "params.hpp"
#include "quadrature.hpp"
#include "recurrence.hpp"
#include "series.hpp"
#include "special.hpp"

namespace gch {

// value = eps0_part + eps * eps1_part, computed in exactly that order.
struct GchEvaluation {
    double value = 0.0;
    double eps0_part = 0.0;
    double eps1_part = 0.0;
    double z = 0.0;
    double x = 0.0;
    int truncated_at = -1;   // only set by the infinite-series path
    double last_term = 0.0;
};

inline GchEvaluation make_evaluation(double eps0, double eps1, double eps, double z, double x) {
    GchEvaluation e;
    e.eps0_part = eps0;
    e.eps1_part = eps1;
    e.value = eps0 + eps * eps1;
    e.z = z;
    e.x = x;
    return e;
}

inline double f_poly(int alpha0, double gamma, double z) {
    if (alpha0 < 0) throw PreconditionError("alpha0", "alpha0 >= 0", "eigennumber must be non-negative");
    if (is_nonpositive_integer(gamma)) throw PoleError("gamma", "f_poly undefined at gamma = " + std::to_string(gamma));
    double gc = gamma_ratio(alpha0 + gamma, gamma);
    double t = 1.0;
    KahanSum s(1.0);
    for (int n = 1; n <= alpha0; ++n) {
        t *= (n - 1.0 - alpha0) * z / (n * (gamma + n - 1.0));
        s += t;
    }
    return gc * s.value();
}

namespace detail {

// The double sum with first-family gamma g and shift s, times Gamma(a0+g)/Gamma(g).
inline double pi_sum(int a0, int a1, double g, double s, double z) {
    if (a0 > a1) throw PreconditionError("alpha0", "alpha0 <= alpha1", "double sum needs alpha0 <= alpha1");
    if (is_nonpositive_integer(g)) throw PoleError("gamma", "pole of Gamma(gamma)");
    double gc = gamma_ratio(a0 + g, g);
    KahanSum outer;
    double fn = 1.0;
    for (int n = 0; n <= a0; ++n) {
        if (n > 0) fn *= (n - 1.0 - a0) * z / (n * (g + n - 1.0));
        double den = (n + 0.5) * (n + g - 0.5);
        if (den == 0.0) throw PoleError("gamma", "Gamma(n + gamma - 1/2) pole in the double sum");
        double tk = (n + s) / den;
        KahanSum inner(tk);
        for (int k = 1; n + k <= a1; ++k) {
            tk *= (n + k - 1.0 - a1) * z / ((n + k + 0.5) * (n + k + g - 0.5));
            inner += tk;
        }
        outer += fn * inner.value();
    }
    return gc * outer.value();
}

// z^e with the x = 0 limit taken by the sign of e.
inline double zpow(double z, double e) {
    if (z > 0.0) return std::exp(e * std::log(z));
    if (e > 0.0) return 0.0;
    if (e == 0.0) return 1.0;
    throw DomainError("x", "x != 0 when 1 - gamma < 0", "z^(1-gamma) is infinite at x = 0");
}

inline double z_of(const GchParams& p, double x) { return -0.5 * p.mu() * x * x; }

} // namespace detail

inline double pi_series(int alpha0, int alpha1, double gamma, double omega, double z) {
    return detail::pi_sum(alpha0, alpha1, gamma, 0.5 * omega, z);
}

inline GchEvaluation qw(const TerminationSpec& term, const GchParams& p, double x) {
    if (!(p.mu() < 0.0)) throw DomainError("mu", "mu < 0", "first-kind polynomial needs mu < 0");
    double z = detail::z_of(p, x);
    double e0 = f_poly(term.alpha0, p.gamma(), z);
    double e1 = -0.5 * x * pi_series(term.alpha0, term.alpha1, p.gamma(), p.omega(), z);
    return make_evaluation(e0, e1, p.eps(), z, x);
}

// Second-kind polynomial: the first-kind sums at gamma -> 2 - gamma, shift
// omega/2 -> omega/2 + 1 - gamma, times z^(1-gamma).
inline GchEvaluation rw(int psi0, int psi1, const GchParams& p, double x) {
    if (psi0 < 0 || psi0 > psi1) throw PreconditionError("psi0", "0 <= psi0 <= psi1", "invalid eigennumbers");
    if (!(p.mu() < 0.0)) throw DomainError("mu", "mu < 0", "second-kind polynomial needs mu < 0");
    double g = p.gamma(), g2 = 2.0 - g;
    if (is_nonpositive_integer(g2)) throw PoleError("gamma", "2 - gamma at a gamma pole");
    double z = detail::z_of(p, x);
    double pref = detail::zpow(z, 1.0 - g);
    double A = f_poly(psi0, g2, z);
    double L = detail::pi_sum(psi0, psi1, g2, 0.5 * p.omega() + 1.0 - g, z);
    return make_evaluation(pref * A, -0.5 * x * pref * L, p.eps(), z, x);
}

enum class LogCase { nu_nonpos_or_one, nu_pos_except_one, nu_equals_one };

inline const char* to_string(LogCase c) {
    switch (c) {
    case LogCase::nu_nonpos_or_one: return "nu_nonpos";
    case LogCase::nu_pos_except_one: return "nu_pos_except_one";
    case LogCase::nu_equals_one: return "nu_equals_one";
    }
    return "?";
}

// Omega under which the order-0 part of the closed-form log series is meant to
// solve the equation.
inline double log_series_Omega0(LogCase c, const TerminationSpec& q, const GchParams& p) {
    if (c == LogCase::nu_nonpos_or_one) return -2.0 * p.mu() * (q.alpha0 + 1.0 - p.gamma());
    return -2.0 * p.mu() * q.alpha0;
}

namespace detail {

class BracketError : public Error {
public:
    BracketError(int k, const std::string& which)
        : Error(ErrorKind::pole, which, "bracket denominator nonzero",
                "vanishing denominator 1/(" + which + " - k) at k = " + std::to_string(k)) {}
};

inline double recip(double d, int k, const char* which) {
    if (d == 0.0) throw BracketError(k, which);
    return 1.0 / d;
}

struct LogSeriesTerms {
    std::vector<double> F, T1, PiT, Sreg;  // coefficients of z^n
    double gc = 1.0;
};

// The closed-form series share one shape. q0, q1 are the eigennumbers, g the
// gamma of the sums and s their shift.
inline LogSeriesTerms log_series_terms(int q0, int q1, double g, double s, const char* n0, const char* n1) {
    LogSeriesTerms r;
    r.gc = gamma_ratio(q0 + g, g);
    int top = q1 + 2;
    r.F.assign(top + 1, 0.0);
    r.T1.assign(top + 1, 0.0);
    r.PiT.assign(top + 1, 0.0);
    std::vector<KahanSum> sreg(top + 1);

    std::vector<double> f(top + 1, 0.0);  // (-q0)_n/(n!(g)_n)
    f[0] = 1.0;
    for (int n = 1; n <= top; ++n) f[n] = f[n - 1] * (n - 1.0 - q0) / (n * (g + n - 1.0));
    for (int n = 0; n <= top; ++n) r.F[n] = r.gc * f[n];

    for (int n = 1; n <= q0; ++n) {
        KahanSum b;
        for (int k = 0; k < n; ++k)
            b += recip(k - static_cast<double>(q0), k, n0) - 1.0 / (k + 1.0) - 1.0 / (k + g);
        r.T1[n] = r.gc * f[n] * 0.5 * b.value();
    }

    // Double sum and the literal S2 (powers z^k only).
    for (int n = 0; n <= q0; ++n) {
        double u = 1.0 / ((n + 0.5) * (n + g - 0.5));
        double c2 = 0.5 - (n + 0.5 * g) * (n + s) / ((n + 0.5) * (n + g - 0.5));
        for (int k = 0; n + k <= q1; ++k) {
            if (k > 0) u *= (n + k - 1.0 - q1) / ((n + k + 0.5) * (n + k + g - 0.5));
            r.PiT[n + k] += f[n] * (n + s) * u;
            sreg[k] += f[n] * c2 * u;
        }
    }

    auto bracket1 = [&](int l) {  // second-family digamma-type terms
        return recip(q1 - static_cast<double>(l), l, n1) + 1.0 / (l + 1.5) + 1.0 / (l + g + 0.5);
    };
    auto bracket0 = [&](int l) {
        return recip(q0 - static_cast<double>(l), l, n0) + 1.0 / (l + 1.0) + 1.0 / (l + g);
    };

    for (int n = 1; n <= top; ++n) {
        double prod1 = 1.0, prod0 = 1.0;
        for (int p = 0; p < n; ++p) {
            prod1 *= (p - static_cast<double>(q1)) / ((p + 1.5) * (p + g + 0.5));
            prod0 *= (p - static_cast<double>(q0)) / ((p + 1.0) * (p + g));
        }
        double term = 0.0;
        if (prod1 != 0.0) {
            KahanSum b;
            for (int k = 0; k < n; ++k) b += bracket1(k);
            term += s / (g - 0.5) * prod1 * b.value();
        }
        if (prod0 != 0.0) {
            KahanSum b;
            for (int k = 0; k < n; ++k) b += bracket0(k);
            term += (n + s) / (2.0 * (n + 0.5) * (n + g - 0.5)) * prod0 * b.value();
        }
        sreg[n] += -term;
    }

    for (int n = 2; n <= top; ++n) {
        KahanSum acc;
        for (int j = 1; j < n; ++j) {
            double prod1 = 1.0, prod0 = 1.0;
            for (int p = j; p < n; ++p) prod1 *= (p - static_cast<double>(q1)) / ((p + 1.5) * (p + g + 0.5));
            for (int k = 0; k < j; ++k) prod0 *= (k - static_cast<double>(q0)) / ((k + 1.0) * (k + g));
            double pre = (j + s) / (2.0 * (j + 0.5) * (j + g - 0.5)) * prod1 * prod0;
            if (pre == 0.0) continue;
            KahanSum b;
            for (int l = 0; l < j; ++l) b += bracket0(l);
            for (int l = j; l < n; ++l) b += bracket1(l);
            acc += pre * b.value();
        }
        sreg[n] += -acc.value();
    }

    r.Sreg.resize(top + 1);
    for (int n = 0; n <= top; ++n) r.Sreg[n] = sreg[n].value();
    return r;
}

} // namespace detail

// The explicit logarithmic second solutions for integer nu, assembled
// term for term into a series in x. q holds (alpha0, alpha1) or (psi0, psi1).
inline SeriesSolution second_solution_log(LogCase c, const TerminationSpec& q, const GchParams& p,
                                          int power_cap = 64) {
    const double nu = p.nu();
    bool ok = is_integer(nu) && ((c == LogCase::nu_nonpos_or_one && nu <= 0.0) ||
                                 (c == LogCase::nu_pos_except_one && nu >= 2.0) ||
                                 (c == LogCase::nu_equals_one && nu == 1.0));
    if (!ok)
        throw CaseMismatchError(std::string("nu matches ") + to_string(c),
                                "nu = " + std::to_string(nu) + " does not match the requested log case");
    const double gam = p.gamma();
    double g = gam, s = 0.5 * p.omega(), lambda = 0.0, pref = 1.0;
    bool one_plus = c != LogCase::nu_equals_one;
    const char* n0 = "alpha0";
    const char* n1 = "alpha1";
    if (c == LogCase::nu_nonpos_or_one) {
        g = 2.0 - gam;
        s = 0.5 * p.omega() + 1.0 - gam;
        lambda = 1.0 - nu;
        pref = std::pow(-0.5 * p.mu(), 1.0 - gam);
        n0 = "psi0";
        n1 = "psi1";
    }
    auto t = detail::log_series_terms(q.alpha0, q.alpha1, g, s, n0, n1);
    double zeta = -0.5 * p.mu();
    SeriesSolution out;
    out.lambda = lambda;
    out.has_log = true;
    for (int o = 0; o < 2; ++o) {
        out.coeffs[o].assign(power_cap + 1, 0.0);
        out.log_part[o].assign(power_cap + 1, 0.0);
    }
    double zn = 1.0;
    int top = static_cast<int>(t.F.size()) - 1;
    for (int n = 0; n <= top; ++n) {
        if (2 * n <= power_cap) {
            out.log_part[0][2 * n] = pref * t.F[n] * zn;
            out.coeffs[0][2 * n] = pref * ((one_plus ? t.F[n] : 0.0) + t.T1[n]) * zn;
        }
        if (2 * n + 1 <= power_cap && p.eps() != 0.0) {
            out.log_part[1][2 * n + 1] = -0.5 * pref * t.gc * t.PiT[n] * zn;
            out.coeffs[1][2 * n + 1] = -0.5 * pref * t.gc * t.Sreg[n] * zn;
        }
        zn *= zeta;
    }
    out.terminated = 2 * top + 1 <= power_cap;
    out.truncated_at = std::min(power_cap, 2 * top + 1);
    return out;
}

// Reduction of order: g2 = g1 * integral from x_lo of x^-nu exp(-(mu x^2/2 + eps x)) / g1^2.
class ReductionOfOrder {
public:
    using Fn = std::function<Eval3(double)>;

    ReductionOfOrder(Fn g1, const GchParams& p, double x_lo, double x_hi)
        : g1_(std::move(g1)), p_(p), lo_(x_lo), hi_(x_hi) {
        if (!(p.mu() < 0.0)) throw DomainError("mu", "mu < 0", "reduction of order expects mu < 0");
        if (!(x_lo > 0.0 && x_hi > x_lo)) throw PreconditionError("x_lo", "0 < x_lo < x_hi", "invalid range");
        constexpr int kScan = 200;
        double prev_x = lo_, prev = g1_(lo_).value;
        if (prev == 0.0) throw ZeroCrossingError(lo_, lo_, "g1 vanishes at the anchor");
        for (int i = 1; i < kScan; ++i) {
            double x = lo_ + (hi_ - lo_) * i / (kScan - 1);
            double v = g1_(x).value;
            if (v == 0.0 || (v > 0.0) != (prev > 0.0))
                throw ZeroCrossingError(prev_x, x, "g1 changes sign inside the integration range");
            prev = v;
            prev_x = x;
        }
    }

    double weight(double t) const {
        return std::exp(-p_.nu() * std::log(t) - (0.5 * p_.mu() * t * t + p_.eps() * t));
    }

    double integral(double x) const {
        auto f = [&](double t) {
            double g = g1_(t).value;
            return weight(t) / (g * g);
        };
        return integrate_interval(f, lo_, x, 1e-16, 1e-14).value;
    }

    Eval3 operator()(double x) const {
        if (x < lo_ || x > hi_) throw DomainError("x", "x_lo <= x <= x_hi", "outside the reduction-of-order range");
        Eval3 g = g1_(x);
        double I = integral(x);
        double w = weight(x);
        double wp = w * (-p_.nu() / x - p_.mu() * x - p_.eps());
        Eval3 r;
        r.value = g.value * I;
        r.d1 = g.d1 * I + w / g.value;
        r.d2 = g.d2 * I + wp / g.value;
        return r;
    }

    double x_lo() const { return lo_; }
    double x_hi() const { return hi_; }

private:
    Fn g1_;
    GchParams p_;
    double lo_, hi_;
};

inline ReductionOfOrder second_solution_integral(ReductionOfOrder::Fn g1, const GchParams& p, double x_lo,
                                                 double x_hi) {
    return ReductionOfOrder(std::move(g1), p, x_lo, x_hi);
}

// Non-terminating first-order series: the polynomial sums with the upper
// limits removed and the eigennumbers taken from the single Omega.
inline GchEvaluation infinite_series_eval(const GchParams& p, Branch b, double x, const SeriesControl& ctl = {}) {
    if (!(p.mu() < 0.0)) throw DomainError("mu", "mu < 0", "series needs mu < 0");
    if (detect_termination(p, b))
        throw PreconditionError("Omega", "non-terminating Omega", "Omega terminates a family; use the polynomial path");
    const double gam = p.gamma();
    double a = -p.Omega() / (2.0 * p.mu());
    double g = gam, s = 0.5 * p.omega(), a0 = a, a1 = a - 0.5;
    double z = detail::z_of(p, x);
    double pref = 1.0;
    if (b == Branch::root1mnu) {
        g = 2.0 - gam;
        s = 0.5 * p.omega() + 1.0 - gam;
        a0 = a + gam - 1.0;
        a1 = a + gam - 1.5;
        pref = detail::zpow(z, 1.0 - gam);
    }
    if (is_nonpositive_integer(g)) throw PoleError("gamma", "series gamma at a pole");
    double gc = gamma_ratio(a0 + g, g);
    KahanSum s0, s1;
    StopRule stop0(ctl), stop1(ctl);
    double fn = 1.0;
    int n = 0;
    bool done0 = false, done1 = false;
    double last = 0.0;
    for (; n < ctl.max_terms; ++n) {
        if (n > 0) fn *= (n - 1.0 - a0) * z / (n * (g + n - 1.0));
        double tk = (n + s) / ((n + 0.5) * (n + g - 0.5));
        KahanSum inner(tk);
        StopRule stop_in(ctl);
        int k = 1;
        for (; k < ctl.max_terms; ++k) {
            tk *= (n + k - 1.0 - a1) * z / ((n + k + 0.5) * (n + k + g - 0.5));
            inner += tk;
            if (stop_in.small(tk, inner.value())) break;
        }
        if (k == ctl.max_terms) throw ConvergenceError("inner series did not converge", inner.value(), k);
        double t1 = fn * inner.value();
        s0 += fn;
        s1 += t1;
        if (!std::isfinite(s0.value()) || !std::isfinite(s1.value()))
            throw ConvergenceError("series overflowed before converging", s0.value(), n);
        done0 = stop0.small(fn, s0.value());
        done1 = stop1.small(t1, s1.value());
        last = std::fmax(std::fabs(fn), std::fabs(t1));
        if (n > a0 + 2 && done0 && done1) break;
    }
    if (n >= ctl.max_terms) throw ConvergenceError("series did not converge within max_terms", gc * s0.value(), n);
    auto e = make_evaluation(pref * gc * s0.value(), -0.5 * x * pref * gc * s1.value(), p.eps(), z, x);
    e.truncated_at = n;
    e.last_term = last;
    return e;
}

} // namespace gch
