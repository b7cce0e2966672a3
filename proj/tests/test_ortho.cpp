#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gch/ortho.hpp"

using namespace gch;

TEST(WeightedIntegral, SpotValue) {
    GchParams p(-2.0, 0.0, 2.0, 0.0);
    EXPECT_NEAR(weighted_integral([](double) { return 1.0; }, p).value, std::sqrt(std::numbers::pi) / 4.0, 1e-12);
}

TEST(CrossIntegral, DistinctAlpha0VanishesAtZeroEps) {
    auto p = GchParams::from_gamma(-2.0, 0.0, 1.5, 0.0);
    auto r = cross_integral(TerminationSpec(0, 0), TerminationSpec(1, 1), p);
    EXPECT_LT(r.abs_deviation, 1e-10);
    EXPECT_TRUE(r.pass);
    EXPECT_FALSE(r.informational);
}

TEST(CrossIntegral, SameAlpha0IsInformational) {
    auto p = GchParams::from_gamma(-1.0, 0.0, 1.5, 0.0);
    auto r = cross_integral(TerminationSpec(1, 1), TerminationSpec(1, 3), p);
    EXPECT_TRUE(r.informational);
    EXPECT_NEAR(r.integral, norm_prediction(TerminationSpec(1, 1), p).eps0, 1e-12 * r.integral);
}

TEST(DiagonalNorm, ZeroEpsMatchesGammaFormula) {
    for (double g : {1.5, 2.5})
        for (int a0 = 0; a0 <= 4; ++a0) {
            auto r = diagonal_norm(TerminationSpec(a0, a0), GchParams::from_gamma(-1.0, 0.0, g, 0.0));
            EXPECT_TRUE(r.pass) << "g=" << g << " a0=" << a0 << " dev " << r.abs_deviation;
        }
}

TEST(DiagonalNorm, IntegralAgainstReference) {
    auto p = GchParams::from_gamma(-2.0, 1e-3, 1.5, 0.0);
    auto r = diagonal_norm(TerminationSpec(1, 2), p);
    EXPECT_NEAR(r.integral, 0.665421021686502765, 1e-12);
}

TEST(DiagonalNorm, FirstOrderPredictionWithinTolerance) {
    // Expected failure: the closed-form eps coefficient disagrees with the
    // exact first-order moment (which is zero here).
    auto p = GchParams::from_gamma(-1.0, 1e-3, 1.5, 0.0);
    auto r = diagonal_norm(TerminationSpec(0, 0), p);
    EXPECT_NEAR(r.diagnostic, r.integral, 1e-5 * r.integral);
    EXPECT_TRUE(r.pass) << "integral " << r.integral << " predicted " << r.predicted << " tolerance "
                        << r.tolerance_used;
}

TEST(CrossIntegral, SmallEpsWithinTolerance) {
    auto p = GchParams::from_gamma(-2.0, 1e-3, 1.5, 0.0);
    auto r = cross_integral(TerminationSpec(0, 1), TerminationSpec(2, 2), p);
    EXPECT_NEAR(r.integral, 1.25276882928912687e-4, 1e-12);
    // Expected failure: the O(eps) overlap exceeds the O(eps^2) tolerance.
    EXPECT_TRUE(r.pass) << "integral " << r.integral << " tolerance " << r.tolerance_used;
}

TEST(CrossIntegral, RequiresNegativeMu) {
    EXPECT_THROW(cross_integral(TerminationSpec(0, 0), TerminationSpec(1, 1), GchParams(0.5, 0.0, 2.0, 0.0)),
                 DomainError);
}

TEST(ExpandFunction, RecoversBasisElement) {
    auto p = GchParams::from_gamma(-1.0, 0.0, 1.5, 0.0);
    TerminationSpec t(1, 1);
    auto e = expand_function([&](double x) { return qw(t, p, x).value; }, 2, 2, p);
    EXPECT_FALSE(e.decay_warning);
    for (const auto& r : e.rows) {
        if (r.q.alpha0 == 1) EXPECT_NEAR(r.coefficient, 1.0, 1e-12);
        else EXPECT_NEAR(r.coefficient, 0.0, 1e-12);
    }
}

TEST(ExpandFunction, ZeroFunction) {
    auto p = GchParams::from_gamma(-1.0, 0.0, 1.5, 0.0);
    auto e = expand_function([](double) { return 0.0; }, 1, 2, p);
    EXPECT_EQ(e.rows.size(), 5u);
    for (const auto& r : e.rows) EXPECT_EQ(r.coefficient, 0.0);
    EXPECT_EQ(e.reconstruct(0.7), 0.0);
    EXPECT_THROW(expand_function([](double) { return 0.0; }, 2, 1, p), PreconditionError);
}
