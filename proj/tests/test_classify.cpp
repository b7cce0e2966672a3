#include <gtest/gtest.h>

#include "gch/classify.hpp"

using namespace gch;

namespace {
using B = ExponentBranch;
struct Fx {
    RawOdeParams raw;
    CaseLabel label;
};
} // namespace

TEST(Classify, OneFixturePerCase) {
    const Fx fx[] = {
        {{3.0, 1.0, 0.0, 1.5, 0.0, B::minus}, CaseLabel::I_a},   {{2.0, 1.0, 0.0, 1.5, 0.0, B::minus}, CaseLabel::I_b},
        {{1.5, 1.0, 0.0, 1.5, 0.0, B::minus}, CaseLabel::I_c},   {{2.0, 1.0, 0.0, 1.5, 0.0, B::plus}, CaseLabel::I_d},
        {{0.5, 1.0, 0.0, 1.5, 0.0, B::plus}, CaseLabel::I_e},    {{2.0, 0.0, 0.0, 1.5, 0.0, B::plus}, CaseLabel::II},
        {{2.0, -0.25, 0.0, 1.5, 0.0, B::minus}, CaseLabel::III_a}, {{2.0, -0.25, 0.0, 1.5, 0.0, B::plus}, CaseLabel::III_b},
        {{0.5, -0.25, 0.0, 1.5, 0.0, B::plus}, CaseLabel::III_c},
    };
    for (const auto& f : fx) EXPECT_EQ(classify(f.raw).case_label, f.label) << to_string(f.label);
}

TEST(Classify, Behaviours) {
    auto d = classify({2.0, 1.0, 0.0, 1.5, 0.0, B::plus});
    EXPECT_EQ(d.behavior_at_zero, Behavior::finite_one);
    auto c = classify({0.5, -0.25, 0.0, 1.5, 0.0, B::plus});
    EXPECT_EQ(c.exponent, 0.5);
    EXPECT_EQ(c.polynomial_at_infinity, Behavior::vanishes);
}

TEST(Classify, ComplexExponentThrows) {
    EXPECT_THROW(classify({1.0, -0.25, 0.0, 1.5, 1.0, B::plus}), DomainError);
}

TEST(Admissibility, PhysicsCaseIsAdmissible) {
    auto a = polynomial_admissible({2.0, -0.25, -0.01, 1.5, 0.0, B::plus});
    EXPECT_TRUE(a.admissible);
    EXPECT_NEAR(a.smallness_ratio, 0.01, 1e-15);
}

TEST(Admissibility, Reasons) {
    auto pos = polynomial_admissible({2.0, 1.0, -0.01, 1.5, 0.0, B::plus});
    ASSERT_FALSE(pos.admissible);
    EXPECT_EQ(pos.reasons.front(), "a1 not real negative");
    auto neg = polynomial_admissible({2.0, -0.25, -0.01, 1.5, 0.0, B::minus});
    ASSERT_EQ(neg.reasons.size(), 1u);
    EXPECT_EQ(neg.reasons.front(), "exponent < 0");
    auto big = polynomial_admissible({2.0, -0.25, -0.5, 1.5, 0.0, B::plus});
    EXPECT_FALSE(big.admissible);
    auto cx = polynomial_admissible({1.0, -0.25, -0.01, 1.5, 1.0, B::plus});
    EXPECT_EQ(cx.reasons.front(), "exponent complex");
}
