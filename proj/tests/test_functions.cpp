#include <gtest/gtest.h>

#include <cmath>

#include "gch/functions.hpp"

using namespace gch;

TEST(FPoly, Examples) {
    for (double z : {0.0, 0.4, 3.0}) EXPECT_EQ(f_poly(0, 1.5, z), 1.0);
    EXPECT_DOUBLE_EQ(f_poly(1, 1.5, 1.0), 0.5);
    for (int a0 = 0; a0 <= 6; ++a0)
        EXPECT_NEAR(f_poly(a0, 2.3, 1.7), pochhammer(2.3, a0) * kummer_m(-a0, 2.3, 1.7),
                    1e-13 * std::fabs(pochhammer(2.3, a0)));
}

TEST(FPoly, Errors) {
    EXPECT_THROW(f_poly(-1, 1.5, 1.0), PreconditionError);
    EXPECT_THROW(f_poly(2, -1.0, 1.0), PoleError);
}

TEST(PiSeries, Examples) {
    EXPECT_DOUBLE_EQ(pi_series(0, 0, 1.5, 1.0, 0.9), 1.0);
    // 30-digit term-by-term reference
    EXPECT_NEAR(pi_series(2, 3, 2.5, 2.0, 0.7), 3.47150222222222250, 1e-14);
    EXPECT_THROW(pi_series(3, 2, 1.5, 1.0, 0.5), PreconditionError);
}

TEST(PiSeries, SingleSumWhenAlpha0IsZero) {
    // alpha0 = 0 keeps only n = 0: sum_k (-a1)_k z^k (s) / ((1/2)_{k+1} (g-1/2)_{k+1})
    double g = 1.5, w = 1.0, z = 0.6;
    int a1 = 3;
    double s = 0.0;
    for (int k = 0; k <= a1; ++k)
        s += pochhammer(-a1, k) * std::pow(z, k) * (0.5 * w) / (pochhammer(0.5, k + 1) * pochhammer(g - 0.5, k + 1));
    EXPECT_NEAR(pi_series(0, a1, g, w, z), s, 1e-15);
}

TEST(Qw, Examples) {
    auto p = GchParams::from_gamma(-1.0, 0.01, 1.5, 0.0);
    auto e = qw(TerminationSpec(0, 0), p, 1.0);
    EXPECT_DOUBLE_EQ(e.value, 0.995);
    EXPECT_EQ(e.eps0_part, 1.0);
    EXPECT_DOUBLE_EQ(e.eps1_part, -0.5);
    auto q = GchParams::from_gamma(-1.0, 0.01, 2.5, 0.0);
    auto z0 = qw(TerminationSpec(2, 3), q, 0.0);
    EXPECT_DOUBLE_EQ(z0.eps0_part, 2.5 * 3.5);
    EXPECT_EQ(z0.eps1_part, 0.0);
    auto e0 = qw(TerminationSpec(2, 3), q.with_eps(0.0), 1.3);
    EXPECT_EQ(e0.value, f_poly(2, 2.5, 0.5 * 1.3 * 1.3));
}

TEST(Qw, EpsStructure) {
    auto p = GchParams::from_gamma(-1.0, 0.0, 1.5, 0.0);
    TerminationSpec t(1, 3);
    auto a = qw(t, p.with_eps(0.01), 0.8), b = qw(t, p.with_eps(-0.03), 0.8);
    EXPECT_EQ(a.eps1_part, b.eps1_part);
    EXPECT_EQ(a.eps0_part, b.eps0_part);
    EXPECT_NEAR(a.value - b.value, 0.04 * a.eps1_part, 4.0 * 2.2e-16 * (std::fabs(a.value) + std::fabs(b.value)));
    EXPECT_EQ(qw(t, p, -0.8).eps1_part, -qw(t, p, 0.8).eps1_part);
}

TEST(Qw, RequiresNegativeMu) {
    EXPECT_THROW(qw(TerminationSpec(0, 0), GchParams(1.0, 0.0, 2.0, 0.0), 1.0), DomainError);
}

TEST(Rw, LowestOrder) {
    auto p = GchParams::from_gamma(-1.0, 0.0, 0.75, 0.0);
    double x = 1.3, z = 0.5 * x * x;
    auto e = rw(0, 0, p, x);
    EXPECT_NEAR(e.eps0_part, std::pow(z, 0.25), 1e-15);
    // Lambda collapses to 2 (omega/2 + 1 - gamma) / (3/2 - gamma) / ... = 1 here
    EXPECT_NEAR(e.eps1_part, -0.623200128022059402, 1e-15);
}

TEST(Rw, OriginWithNegativeExponentThrows) {
    auto p = GchParams::from_gamma(-1.0, 0.0, 1.5, 0.0);
    EXPECT_THROW(rw(0, 1, p, 0.0), DomainError);
    EXPECT_EQ(rw(0, 1, GchParams::from_gamma(-1.0, 0.0, 0.5, 0.0), 0.0).eps0_part, 0.0);
}

TEST(LogSeries, NuOneLowestOrderIsLog) {
    GchParams p(-1.0, 0.0, 1.0, 0.0);
    auto s = second_solution_log(LogCase::nu_equals_one, TerminationSpec(0, 0), p);
    for (double x : {0.3, 0.7, 2.0}) EXPECT_NEAR(s.evaluate(x, 0.0).value, std::log(x), 1e-15);
}

TEST(LogSeries, WrongCaseThrows) {
    GchParams p(-1.0, 0.0, 2.0, 0.0);
    EXPECT_THROW(second_solution_log(LogCase::nu_equals_one, TerminationSpec(0, 0), p), CaseMismatchError);
    EXPECT_THROW(second_solution_log(LogCase::nu_nonpos_or_one, TerminationSpec(0, 0), p), CaseMismatchError);
}

TEST(LogSeries, ClosedFormSeriesSolvesEquation) {
    // Stated property: the order-0 part solves the eps = 0 equation at Omega0.
    // The closed-form sums omit derivative terms, so this does not hold in general.
    struct C { LogCase c; double nu; };
    for (C c : {C{LogCase::nu_nonpos_or_one, -2.0}, C{LogCase::nu_equals_one, 1.0}, C{LogCase::nu_pos_except_one, 3.0}}) {
        TerminationSpec q(1, 2);
        GchParams base(-1.0, 0.0, c.nu, 0.0);
        GchParams p = base.with_Omega(log_series_Omega0(c.c, q, base));
        auto s = second_solution_log(c.c, q, p);
        for (double x : {0.3, 0.7, 1.2})
            EXPECT_LT(ode_residual(p, x, s.evaluate(x, 0.0)).relative(), 1e-8) << to_string(c.c) << " x=" << x;
    }
}

TEST(ReductionOfOrder, ZeroCrossingThrows) {
    GchParams p(-1.0, 0.0, 2.0, 0.0);
    auto g1 = [](double x) { return Eval3{x - 1.0, 1.0, 0.0}; };
    EXPECT_THROW(second_solution_integral(g1, p, 0.5, 2.0), ZeroCrossingError);
}

TEST(ReductionOfOrder, ConstantSolution) {
    // Omega = eps = 0: g1 = 1, g2 = integral of t^-nu e^{-mu t^2/2}
    GchParams p(-1.0, 0.0, 0.0, 0.0);
    auto g1 = [](double) { return Eval3{1.0, 0.0, 0.0}; };
    auto g2 = second_solution_integral(g1, p, 0.2, 2.0);
    for (double x : {0.5, 1.0, 1.9}) EXPECT_LT(ode_residual(p, x, g2(x)).relative(), 1e-12);
    EXPECT_THROW(g2(2.5), DomainError);
}

TEST(InfiniteSeries, KummerLimit) {
    double g = 1.5, a = 0.7, z = 0.8;
    auto p = GchParams::from_gamma(-1.0, 0.0, g, 2.0 * a);
    auto e = infinite_series_eval(p, Branch::root0, std::sqrt(2.0 * z));
    EXPECT_NEAR(e.eps0_part, 0.754368896376956072, 1e-10);
    EXPECT_GE(e.truncated_at, 0);
    auto e0 = infinite_series_eval(p, Branch::root0, 0.0);
    EXPECT_NEAR(e0.eps0_part, std::exp(log_gamma(g + a) - log_gamma(g)), 1e-14);
}

TEST(InfiniteSeries, Errors) {
    auto term = GchParams::from_gamma(-1.0, 0.0, 1.5, 4.0);  // alpha0 = 2
    EXPECT_THROW(infinite_series_eval(term, Branch::root0, 1.0), PreconditionError);
    auto p = GchParams::from_gamma(-1.0, 0.0, 1.5, 1.4);
    SeriesControl tight;
    tight.max_terms = 20;
    EXPECT_THROW(infinite_series_eval(p, Branch::root0, 30.0, tight), ConvergenceError);
}
