#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gch/recurrence.hpp"

using namespace gch;

namespace {
double rel(double a, double b) {
    double m = std::fmax(std::fabs(a), std::fabs(b));
    return m == 0.0 ? 0.0 : std::fabs(a - b) / m;
}
} // namespace

TEST(CoeffA, Examples) {
    GchParams p(-1.0, 0.01, 2.0, 0.0);
    EXPECT_DOUBLE_EQ(coeff_a(0, 0.0, p), -0.005);
    EXPECT_EQ(coeff_a(3, 0.0, p.with_eps(0.0)), 0.0);
    GchParams q(-1.0, 0.01, 3.0, 0.0);
    EXPECT_NEAR(coeff_a(2, 0.0, q), -0.01 * 3.5 / 15.0, 1e-18);
}

TEST(CoeffB, TerminationZeros) {
    GchParams p(-1.0, 1e-3, 2.0, 0.0);
    const double mu = p.mu();
    EXPECT_DOUBLE_EQ(coeff_b(1, 0.0, p, -2.0 * mu), -(-2.0 * mu) / (2.0 * 3.0));
    EXPECT_EQ(coeff_b(3, 0.0, p, -2.0 * mu * 1), 0.0);
    EXPECT_EQ(coeff_b(2 * 3 + 1, 0.0, p, -2.0 * mu * 3), 0.0);
    EXPECT_EQ(coeff_b(2 * 2 + 2, 0.0, p, -2.0 * mu * 2.5), 0.0);
}

TEST(CoeffAB, ResonanceThrows) {
    GchParams p(-1.0, 1e-3, 2.0, 0.0);
    EXPECT_THROW(coeff_a(0, -1.0, p), ResonanceError);
    EXPECT_THROW(coeff_b(1, -3.0, p, 1.0), ResonanceError);
}

TEST(BuildCoefficients, LowOrderProducts) {
    GchParams p(-1.3, 2e-3, 2.4, 0.0);
    TerminationSpec t(2, 3);
    auto s = build_coefficients(p, 0.0, t, 10);
    double Om0 = -2.0 * p.mu() * 2, Om1 = -2.0 * p.mu() * 3.5;
    double B1 = coeff_b(1, 0.0, p, Om0);
    EXPECT_DOUBLE_EQ(s.coeff(0, 0), 1.0);
    EXPECT_NEAR(s.coeff(0, 2), B1, 1e-16);
    double A0 = coeff_a(0, 0.0, p), A2 = coeff_a(2, 0.0, p);
    double B2 = coeff_b(2, 0.0, p, Om1);
    EXPECT_LE(rel(s.coeff(1, 3) * p.eps(), A0 * B2 + A2 * B1), 1e-14);
}

TEST(BuildCoefficients, FamiliesTerminate) {
    GchParams p(-1.0, 1e-3, 2.0, 0.0);
    auto s = build_coefficients(p, 0.0, TerminationSpec(1, 2), 30);
    for (int n = 2; 2 * n <= 30; ++n) EXPECT_EQ(s.coeff(0, 2 * n), 0.0) << n;
    for (int n = 3; 2 * n + 1 <= 30; ++n) EXPECT_EQ(s.coeff(1, 2 * n + 1), 0.0) << n;
    EXPECT_NE(s.coeff(1, 5), 0.0);
}

TEST(BuildCoefficients, ZeroEpsLeavesOnlyEvenFamily) {
    GchParams p(-1.0, 0.0, 2.0, 0.0);
    auto s = build_coefficients(p, 0.0, TerminationSpec(2, 2), 12);
    for (int k = 0; k <= 12; ++k) EXPECT_EQ(s.coeff(1, k), 0.0);
}

TEST(ClosedForm, SimplestCase) {
    GchParams p = GchParams::from_gamma(-1.0, 0.01, 1.5, 0.0);
    auto s = closed_form_coefficients(TerminationSpec(0, 0), p);
    EXPECT_EQ(s.coeff(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(s.coeff(1, 1), -0.5);
    for (int k = 2; k < 6; ++k) EXPECT_EQ(s.coeff(0, k), 0.0);
}

TEST(ClosedForm, MatchesRecurrenceOnGrid) {
    for (double g : {0.3, 1.5, 2.7})
        for (int a1 = 0; a1 <= 6; ++a1)
            for (int a0 = 0; a0 <= a1; ++a0) {
                auto p = GchParams::from_gamma(-1.0, 1e-3, g, 0.0);
                TerminationSpec t(a0, a1);
                auto cf = closed_form_coefficients(t, p);
                auto bc = build_coefficients(p, 0.0, t, 2 * a1 + 1, gamma_ratio(a0 + g, g));
                for (int o = 0; o < 2; ++o)
                    for (int k = 0; k <= 2 * a1 + 1; ++k)
                        EXPECT_LE(rel(cf.coeff(o, k), bc.coeff(o, k)), 1e-12)
                            << "g=" << g << " a=(" << a0 << "," << a1 << ") order " << o << " power " << k;
            }
}

TEST(DetectTermination, Examples) {
    auto e = detect_termination(GchParams(-1.0, 1e-3, 2.0, 6.0), Branch::root0);
    ASSERT_TRUE(e);
    EXPECT_EQ(e->family, DetectedTermination::Family::even);
    EXPECT_EQ(e->quantum, 3);
    auto o = detect_termination(GchParams(-1.0, 1e-3, 2.0, 5.0), Branch::root0);
    ASSERT_TRUE(o);
    EXPECT_EQ(o->family, DetectedTermination::Family::odd);
    EXPECT_EQ(o->quantum, 2);
    EXPECT_FALSE(detect_termination(GchParams(-1.0, 1e-3, 2.0, std::numbers::pi), Branch::root0));
}

TEST(DetectTermination, SecondRootShiftsByGamma) {
    // psi0 = -Omega/(2 mu) + gamma - 1
    GchParams p = GchParams::from_gamma(-1.0, 0.0, 0.75, 2.0 * (2 + 1.0 - 0.75));
    auto e = detect_termination(p, Branch::root1mnu);
    ASSERT_TRUE(e);
    EXPECT_EQ(e->family, DetectedTermination::Family::even);
    EXPECT_EQ(e->quantum, 2);
}

TEST(FrobeniusCase, Classification) {
    EXPECT_EQ(frobenius_case(0.5), FrobeniusCase::A);
    EXPECT_EQ(frobenius_case(1.0), FrobeniusCase::B);
    EXPECT_EQ(frobenius_case(0.0), FrobeniusCase::C);
    EXPECT_EQ(frobenius_case(-2.0), FrobeniusCase::C);
    EXPECT_EQ(frobenius_case(2.5), FrobeniusCase::D);
    EXPECT_EQ(frobenius_case(3.0), FrobeniusCase::E);
}

TEST(FrobeniusSolve, CaseMismatchThrows) {
    EXPECT_THROW(frobenius_solve(GchParams(-1.0, 0.0, 0.5, 1.0), FrobeniusCase::B), CaseMismatchError);
}

TEST(FrobeniusSolve, LogPartPresence) {
    auto a = frobenius_solve(GchParams(-1.0, 1e-3, 0.5, 2.0), FrobeniusCase::A);
    EXPECT_FALSE(a.first.has_log);
    EXPECT_FALSE(a.second.has_log);
    EXPECT_DOUBLE_EQ(a.second.lambda, 0.5);
    auto b = frobenius_solve(GchParams(-1.0, 1e-3, 1.0, 2.0), FrobeniusCase::B);
    ASSERT_TRUE(b.second.has_log);
    EXPECT_NE(b.second.log_coeff(0, 0), 0.0);
}

class FrobeniusResidual : public ::testing::TestWithParam<double> {};

TEST_P(FrobeniusResidual, BothSolutionsSolveTheEquation) {
    double nu = GetParam();
    GchParams p(-1.0, 1e-3, nu, 2.0);
    auto pr = frobenius_solve(p, frobenius_case(nu));
    for (double x : {0.3, 0.7, 1.2}) {
        EXPECT_LT(ode_residual(p, x, pr.first.evaluate(x, p.eps())).relative(), 1e-8) << x;
        EXPECT_LT(ode_residual(p, x, pr.second.evaluate(x, p.eps())).relative(), 1e-8) << x;
    }
}

INSTANTIATE_TEST_SUITE_P(AllCases, FrobeniusResidual, ::testing::Values(-2.0, 0.0, 1.0, 3.0, 0.5, 2.5, -1.5));

TEST(ExactCoefficients, DualDerivativeMatchesFiniteDifference) {
    GchParams p(-1.0, 1e-3, 0.5, 2.0);
    const double lam = 0.3, h = 1e-6;
    auto d = exact_coefficients<Dual>(p, Dual(lam, 1.0), 10);
    auto cp = exact_coefficients<double>(p, lam + h, 10);
    auto cm = exact_coefficients<double>(p, lam - h, 10);
    for (int n = 1; n <= 10; ++n) EXPECT_LE(rel(d[n].d, (cp[n] - cm[n]) / (2.0 * h)), 1e-6) << n;
}
