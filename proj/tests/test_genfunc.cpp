#include <gtest/gtest.h>

#include <cmath>

#include "gch/genfunc.hpp"

using namespace gch;

TEST(TermA, TripleSumMatchesAppellForm) {
    for (double v : {0.1, 0.3, 0.6})
        for (double z : {0.2, 1.0}) {
            double t = genfunc_term_a_triple(v, 0.7 * v, z, 1.5), a = genfunc_term_a_appell(v, 0.7 * v, z, 1.5);
            EXPECT_LE(std::fabs(t - a), 1e-10 * std::fabs(a)) << v << " " << z;
        }
}

TEST(TermA, Reference) {
    EXPECT_NEAR(genfunc_term_a_appell(0.3, 0.2, 0.5, 1.5), 2.63971228337809712, 1e-13);
}

TEST(GenFunc, OriginInV) {
    // v0 = v1 = 0 keeps only the (0,0) term, weighted by 2
    auto p = GchParams::from_gamma(-1.0, 1e-3, 1.5, 0.0);
    double z = 0.8, x = std::sqrt(2.0 * z);
    EXPECT_NEAR(genfunc_lhs(0.0, 0.0, z, p).value, 2.0 * (1.0 - 0.5 * p.eps() * x), 1e-15);
}

TEST(GenFunc, ThreeWayAgreementAtZeroEps) {
    auto p = GchParams::from_gamma(-1.0, 0.0, 1.5, 0.0);
    for (double z : {0.3, 1.2}) {
        auto c = genfunc_check(0.3, 0.2, z, p);
        EXPECT_LE(c.deviation, 1e-8) << "z=" << z;
    }
}

TEST(GenFunc, ThreeWayAgreementAtSmallEps) {
    auto p = GchParams::from_gamma(-1.0, 1e-3, 1.5, 0.0);
    auto c = genfunc_check(0.3, 0.2, 0.5, p);
    // Series and integral agree with each other.
    EXPECT_LE(std::fabs(c.rhs_series - c.rhs_integral), 1e-6 * std::fabs(c.rhs_series));
    // Expected failure: both differ from the direct sum by more than 1e-6.
    EXPECT_TRUE(c.pass) << "lhs " << c.lhs << " series " << c.rhs_series << " integral " << c.rhs_integral;
}

TEST(GenFunc, Errors) {
    auto p = GchParams::from_gamma(-1.0, 1e-3, 1.5, 0.0);
    EXPECT_THROW(genfunc_rhs_series(0.3, 0.0, 0.5, p), UnsupportedError);
    EXPECT_THROW(genfunc_lhs(1.2, 0.1, 0.5, p), DomainError);
    EXPECT_THROW(genfunc_rhs_integral(0.3, -1.0, 0.5, p), DomainError);
}
