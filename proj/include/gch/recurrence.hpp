#pragma once

#include <cmath>
#include <algorithm>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "dual.hpp"
#include "error.hpp"
#include "params.hpp"
#include "special.hpp"

namespace gch {

namespace detail {

template <class T>
void check_denominator(const T& d, int n, const T& lambda) {
    if (std::fabs(value_of(d)) < 1e-13)
        throw ResonanceError(n, value_of(lambda),
                             "recurrence denominator vanishes at n = " + std::to_string(n));
}

} // namespace detail

// A_n of C_{n+1} = A_n C_n + B_n C_{n-1}.
template <class T>
T coeff_a(int n, T lambda, const GchParams& p) {
    T d1 = T(n + 1.0) + lambda;
    T d2 = T(n + p.nu()) + lambda;
    detail::check_denominator(d1, n, lambda);
    detail::check_denominator(d2, n, lambda);
    return T(-p.eps()) * (T(n + p.omega()) + lambda) / (d1 * d2);
}

template <class T>
T coeff_b(int n, T lambda, const GchParams& p, double Omega) {
    T d1 = T(n + 1.0) + lambda;
    T d2 = T(n + p.nu()) + lambda;
    detail::check_denominator(d1, n, lambda);
    detail::check_denominator(d2, n, lambda);
    return -(T(Omega + p.mu() * (n - 1.0)) + T(p.mu()) * lambda) / (d1 * d2);
}

inline double coeff_a(int n, double lambda, const GchParams& p) { return coeff_a<double>(n, lambda, p); }
inline double coeff_b(int n, double lambda, const GchParams& p, double Omega) {
    return coeff_b<double>(n, lambda, p, Omega);
}

namespace detail {

inline Branch branch_of(double lambda, const GchParams& p) {
    if (std::fabs(lambda) < 1e-12) return Branch::root0;
    if (std::fabs(lambda - (1.0 - p.nu())) < 1e-12) return Branch::root1mnu;
    throw PreconditionError("lambda", "lambda = 0 or lambda = 1 - nu",
                            "termination requires an indicial root");
}

// Eigenvalues making the even (first) and odd (second) family terminate.
inline std::pair<double, double> family_Omegas(const TerminationSpec& t, Branch b, const GchParams& p) {
    double mu = p.mu(), g = p.gamma();
    if (b == Branch::root0) return {-2.0 * mu * t.alpha0, -2.0 * mu * (t.alpha1 + 0.5)};
    return {-2.0 * mu * (t.alpha0 + 1.0 - g), -2.0 * mu * (t.alpha1 + 1.5 - g)};
}

} // namespace detail

// First-order-in-eps coefficients: the even family at order 0 and the odd
// family divided by eps at order 1. With a termination spec the odd-index B
// factors use the first eigenvalue and the even-index ones use the second.
inline SeriesSolution build_coefficients(const GchParams& p, double lambda,
                                         const std::optional<TerminationSpec>& term, int power_cap = 64,
                                         double c0 = 1.0) {
    if (power_cap < 1) throw PreconditionError("power_cap", "power_cap >= 1", "need at least one power");
    double Om_even = p.Omega(), Om_odd = p.Omega();
    int stop_even = -1, stop_odd = -1;  // B index forced to zero
    if (term) {
        Branch b = detail::branch_of(lambda, p);
        std::tie(Om_even, Om_odd) = detail::family_Omegas(*term, b, p);
        stop_even = 2 * term->alpha0 + 1;
        stop_odd = 2 * term->alpha1 + 2;
    }
    SeriesSolution s;
    s.lambda = lambda;
    s.coeffs[0].assign(power_cap + 1, 0.0);
    s.coeffs[1].assign(power_cap + 1, 0.0);

    std::vector<double> P{c0};  // P[k] = C_{2k}
    for (int k = 0; 2 * k + 2 <= power_cap + 1; ++k) {
        int n = 2 * k + 1;
        double B = n == stop_even ? 0.0 : coeff_b(n, lambda, p, Om_even);
        P.push_back(P.back() * B);
    }
    for (std::size_t k = 0; k < P.size() && 2 * k <= static_cast<std::size_t>(power_cap); ++k)
        s.coeffs[0][2 * k] = P[k];

    auto a_hat = [&](int j) {
        double d1 = j + lambda + 1.0, d2 = j + lambda + p.nu();
        detail::check_denominator(d1, j, lambda);
        detail::check_denominator(d2, j, lambda);
        return -(j + lambda + p.omega()) / (d1 * d2);
    };
    double S = 0.0;
    for (int n = 0; 2 * n + 1 <= power_cap; ++n) {
        double carry = 0.0;
        if (n > 0) {
            double B = 2 * n == stop_odd ? 0.0 : coeff_b(2 * n, lambda, p, Om_odd);
            carry = B * S;
        }
        S = a_hat(2 * n) * P[n] + carry;
        s.coeffs[1][2 * n + 1] = S;
    }
    if (p.eps() == 0.0) std::fill(s.coeffs[1].begin(), s.coeffs[1].end(), 0.0);

    if (term && 2 * term->alpha1 + 1 <= power_cap && 2 * term->alpha0 <= power_cap) {
        s.terminated = true;
        s.truncated_at = 2 * term->alpha1 + 1;
        for (int q = 2 * term->alpha0 + 2; q <= power_cap; q += 2) s.coeffs[0][q] = 0.0;
        for (int q = 2 * term->alpha1 + 3; q <= power_cap; q += 2) s.coeffs[1][q] = 0.0;
    } else {
        s.truncated_at = power_cap;
        s.last_magnitude = std::fmax(std::fabs(s.coeffs[0][power_cap]), std::fabs(s.coeffs[1][power_cap]));
        if (power_cap >= 1)
            s.last_magnitude = std::fmax(s.last_magnitude, std::fmax(std::fabs(s.coeffs[0][power_cap - 1]),
                                                                     std::fabs(s.coeffs[1][power_cap - 1])));
    }
    return s;
}

namespace detail {

struct PolyTerms {
    double gc;  // Gamma(a0 + g)/Gamma(g)
    std::vector<double> f;           // coefficient of z^n in F / gc
    std::vector<double> pi;          // coefficient of z^N in the double sum (without gc)
};

// Coefficients in z of F and of the double sum with shift s; F uses gamma g.
inline PolyTerms poly_terms(int a0, int a1, double g, double s) {
    PolyTerms t;
    t.gc = gamma_ratio(a0 + g, g);
    t.f.assign(a0 + 1, 0.0);
    t.pi.assign(a1 + 1, 0.0);
    std::vector<KahanSum> acc(a1 + 1);
    double fn = 1.0;
    for (int n = 0; n <= a0; ++n) {
        if (n > 0) fn *= (n - 1.0 - a0) / (n * (g + n - 1.0));
        t.f[n] = fn;
        double tk = (n + s) / ((n + 0.5) * (n + g - 0.5));
        for (int k = 0; n + k <= a1; ++k) {
            if (k > 0) tk *= (n + k - 1.0 - a1) / ((n + k + 0.5) * (n + k + g - 0.5));
            acc[n + k] += fn * tk;
        }
    }
    for (int N = 0; N <= a1; ++N) t.pi[N] = acc[N].value();
    return t;
}

} // namespace detail

// Coefficients of F and -(x/2)Pi re-expressed in powers of x.
inline SeriesSolution closed_form_coefficients(const TerminationSpec& term, const GchParams& p) {
    if (is_nonpositive_integer(p.gamma())) throw PoleError("gamma", "gamma at a pole");
    auto t = detail::poly_terms(term.alpha0, term.alpha1, p.gamma(), 0.5 * p.omega());
    double zeta = -0.5 * p.mu();
    int cap = 2 * term.alpha1 + 1;
    SeriesSolution s;
    s.coeffs[0].assign(cap + 1, 0.0);
    s.coeffs[1].assign(cap + 1, 0.0);
    double zn = 1.0;
    for (int n = 0; n <= term.alpha1; ++n) {
        if (n <= term.alpha0) s.coeffs[0][2 * n] = t.gc * t.f[n] * zn;
        s.coeffs[1][2 * n + 1] = p.eps() == 0.0 ? 0.0 : -0.5 * t.gc * t.pi[n] * zn;
        zn *= zeta;
    }
    s.terminated = true;
    s.truncated_at = cap;
    return s;
}

struct DetectedTermination {
    enum class Family { even, odd };
    Branch branch;
    Family family;
    int quantum;
};

// Which family a single Omega terminates, if any. Both cannot hold at once.
inline std::optional<DetectedTermination> detect_termination(const GchParams& p, Branch b) {
    if (p.mu() == 0.0) return std::nullopt;
    double a = -p.Omega() / (2.0 * p.mu());
    double q0 = a, q1 = a - 0.5;
    if (b == Branch::root1mnu) {
        q0 = a + p.gamma() - 1.0;
        q1 = a + p.gamma() - 1.5;
    }
    auto hit = [](double q) { return q > -1e-9 && std::fabs(q - std::nearbyint(q)) <= 1e-9; };
    using F = DetectedTermination::Family;
    if (hit(q0)) return DetectedTermination{b, F::even, static_cast<int>(std::nearbyint(q0))};
    if (hit(q1)) return DetectedTermination{b, F::odd, static_cast<int>(std::nearbyint(q1))};
    return std::nullopt;
}

enum class FrobeniusCase { A, B, C, D, E };

inline const char* to_string(FrobeniusCase c) {
    switch (c) {
    case FrobeniusCase::A: return "A";
    case FrobeniusCase::B: return "B";
    case FrobeniusCase::C: return "C";
    case FrobeniusCase::D: return "D";
    case FrobeniusCase::E: return "E";
    }
    return "?";
}

// A: nu < 1 non-integer, B: nu = 1, C: nu integer <= 0, D: nu > 1 non-integer,
// E: nu integer >= 2.
inline FrobeniusCase frobenius_case(double nu) {
    if (is_integer(nu)) {
        if (nu == 1.0) return FrobeniusCase::B;
        return nu <= 0.0 ? FrobeniusCase::C : FrobeniusCase::E;
    }
    return nu < 1.0 ? FrobeniusCase::A : FrobeniusCase::D;
}

// Exact single-Omega recurrence with the full eps dependence, C_0 = c0.
template <class T>
std::vector<T> exact_coefficients(const GchParams& p, T lambda, int n_max, T c0 = T(1.0)) {
    std::vector<T> c(n_max + 1, T(0.0));
    c[0] = c0;
    for (int n = 0; n < n_max; ++n) {
        T next = coeff_a<T>(n, lambda, p) * c[n];
        if (n > 0) next += coeff_b<T>(n, lambda, p, p.Omega()) * c[n - 1];
        c[n + 1] = next;
    }
    return c;
}

namespace detail {

inline SeriesSolution plain_solution(const GchParams& p, double lambda, int cap) {
    SeriesSolution s;
    s.lambda = lambda;
    s.eps_split = false;
    s.coeffs[0] = exact_coefficients<double>(p, lambda, cap);
    s.truncated_at = cap;
    s.last_magnitude = std::fabs(s.coeffs[0][cap]);
    return s;
}

// d/dlambda [(lambda - r) G(lambda)] at the smaller root r, where the step
// producing C_N has the factor (lambda - r) in one of its denominators.
inline SeriesSolution log_solution(const GchParams& p, double r, int N, bool cancel_second, int cap) {
    Dual lam(r, 1.0);
    std::vector<Dual> E(N);
    E[0] = Dual(1.0);
    for (int n = 0; n + 1 < N; ++n) {
        Dual next = coeff_a<Dual>(n, lam, p) * E[n];
        if (n > 0) next += coeff_b<Dual>(n, lam, p, p.Omega()) * E[n - 1];
        E[n + 1] = next;
    }
    std::vector<Dual> D(cap + 1);
    Dual shift = lam - Dual(r);
    for (int n = 0; n < N && n <= cap; ++n) D[n] = shift * E[n];
    if (N <= cap) {
        int n = N - 1;
        Dual den1 = Dual(n + 1.0) + lam, den2 = Dual(n + p.nu()) + lam;
        Dual other = cancel_second ? den1 : den2;
        Dual a_num = Dual(-p.eps()) * (Dual(n + p.omega()) + lam);
        Dual b_num = -(Dual(p.Omega() + p.mu() * (n - 1.0)) + Dual(p.mu()) * lam);
        Dual acc = a_num * E[n];
        if (n > 0) acc += b_num * E[n - 1];
        D[N] = acc / other;
    }
    for (int n = N; n < cap; ++n) {
        D[n + 1] = coeff_a<Dual>(n, lam, p) * D[n] + coeff_b<Dual>(n, lam, p, p.Omega()) * D[n - 1];
    }
    SeriesSolution s;
    s.lambda = r;
    s.eps_split = false;
    s.has_log = true;
    s.coeffs[0].resize(cap + 1);
    s.log_part[0].resize(cap + 1);
    for (int n = 0; n <= cap; ++n) {
        s.coeffs[0][n] = D[n].d;
        s.log_part[0][n] = D[n].v;
    }
    s.truncated_at = cap;
    s.last_magnitude = std::fmax(std::fabs(D[cap].v), std::fabs(D[cap].d));
    return s;
}

} // namespace detail

// Two independent solutions about x = 0 from the exact recurrence.
inline std::pair<SeriesSolution, SeriesSolution> frobenius_solve(const GchParams& p, FrobeniusCase which,
                                                                 int power_cap = 64) {
    FrobeniusCase expected = frobenius_case(p.nu());
    if (which != expected)
        throw CaseMismatchError(std::string("case ") + to_string(expected),
                                std::string("nu = ") + std::to_string(p.nu()) + " belongs to case " +
                                    to_string(expected) + ", not " + to_string(which));
    const double nu = p.nu();
    switch (which) {
    case FrobeniusCase::A:
    case FrobeniusCase::D:
        return {detail::plain_solution(p, 0.0, power_cap), detail::plain_solution(p, 1.0 - nu, power_cap)};
    case FrobeniusCase::B: {
        Dual lam(0.0, 1.0);
        auto D = exact_coefficients<Dual>(p, lam, power_cap);
        SeriesSolution g2;
        g2.eps_split = false;
        g2.has_log = true;
        for (auto& d : D) {
            g2.coeffs[0].push_back(d.d);
            g2.log_part[0].push_back(d.v);
        }
        g2.truncated_at = power_cap;
        g2.last_magnitude = std::fmax(std::fabs(D.back().v), std::fabs(D.back().d));
        return {detail::plain_solution(p, 0.0, power_cap), g2};
    }
    case FrobeniusCase::C: {
        int N = static_cast<int>(std::lround(1.0 - nu));
        return {detail::plain_solution(p, 1.0 - nu, power_cap), detail::log_solution(p, 0.0, N, true, power_cap)};
    }
    case FrobeniusCase::E: {
        int N = static_cast<int>(std::lround(nu - 1.0));
        return {detail::plain_solution(p, 0.0, power_cap), detail::log_solution(p, 1.0 - nu, N, false, power_cap)};
    }
    }
    throw CaseMismatchError("valid case", "unknown FrobeniusCase");
}

} // namespace gch
