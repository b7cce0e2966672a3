#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "error.hpp"

namespace gch {

enum class ExponentBranch { plus, minus };

// Coefficients a0..d1 of the raw radial equation; the exponent is derived.
struct RawOdeParams {
    double a0 = 0.0, a1 = 0.0, b1 = 0.0, c1 = 0.0, d1 = 0.0;
    ExponentBranch branch = ExponentBranch::plus;

    double discriminant() const { return (a0 - 1.0) * (a0 - 1.0) - 4.0 * d1; }
    double exponent() const {
        double disc = discriminant();
        if (disc < 0.0)
            throw DomainError("d1", "(a0-1)^2 >= 4 d1", "indicial exponent is complex");
        double r = std::sqrt(disc);
        return 0.5 * (-(a0 - 1.0) + (branch == ExponentBranch::plus ? r : -r));
    }
};

enum class CaseLabel { I_a, I_b, I_c, I_d, I_e, II, III_a, III_b, III_c };
enum class Behavior { divergent, finite_one, vanishes, convergent, bounded_oscillatory };

inline const char* to_string(CaseLabel c) {
    switch (c) {
    case CaseLabel::I_a: return "I_a";
    case CaseLabel::I_b: return "I_b";
    case CaseLabel::I_c: return "I_c";
    case CaseLabel::I_d: return "I_d";
    case CaseLabel::I_e: return "I_e";
    case CaseLabel::II: return "II";
    case CaseLabel::III_a: return "III_a";
    case CaseLabel::III_b: return "III_b";
    case CaseLabel::III_c: return "III_c";
    }
    return "?";
}

inline const char* to_string(Behavior b) {
    switch (b) {
    case Behavior::divergent: return "divergent";
    case Behavior::finite_one: return "finite_one";
    case Behavior::vanishes: return "vanishes";
    case Behavior::convergent: return "convergent";
    case Behavior::bounded_oscillatory: return "bounded_oscillatory";
    }
    return "?";
}

struct ClassificationResult {
    CaseLabel case_label;
    double exponent;
    Behavior behavior_at_zero;            // infinite-series solution
    Behavior behavior_at_infinity;
    Behavior polynomial_at_zero;          // polynomial branch, meaningful for a1 < 0
    Behavior polynomial_at_infinity;
    bool polynomial_admissible;
};

struct Admissibility {
    bool admissible = false;
    double smallness_ratio = 0.0;        // |b1| / (2 sqrt|a1|)
    std::vector<std::string> reasons;     // one entry per failed clause
};

namespace detail {
inline constexpr double kClassTol = 1e-12;
inline int sign_tol(double v) { return v > kClassTol ? 1 : (v < -kClassTol ? -1 : 0); }
} // namespace detail

inline Admissibility polynomial_admissible(const RawOdeParams& raw) {
    Admissibility a;
    a.smallness_ratio = raw.a1 != 0.0 ? std::fabs(raw.b1) / (2.0 * std::sqrt(std::fabs(raw.a1)))
                                      : std::numeric_limits<double>::infinity();
    if (!(raw.a1 < 0.0)) a.reasons.push_back("a1 not real negative");
    double e = 0.0;
    try {
        e = raw.exponent();
        if (detail::sign_tol(e) < 0) a.reasons.push_back("exponent < 0");
    } catch (const DomainError&) {
        a.reasons.push_back("exponent complex");
    }
    if (!(a.smallness_ratio < 0.1)) a.reasons.push_back("|b1|/(2 sqrt|a1|) not small (threshold 0.1)");
    a.admissible = a.reasons.empty();
    return a;
}

inline ClassificationResult classify(const RawOdeParams& raw) {
    double e = raw.exponent();
    int sa = detail::sign_tol(raw.a1);
    using B = Behavior;
    ClassificationResult r{};
    r.exponent = e;
    int se = detail::sign_tol(e);
    int sm = detail::sign_tol(e + 1.0);
    if (sa > 0) {
        if (sm < 0) r = {CaseLabel::I_a, e, B::divergent, B::vanishes, B::divergent, B::divergent, false};
        else if (sm == 0) r = {CaseLabel::I_b, e, B::divergent, B::bounded_oscillatory, B::divergent, B::divergent, false};
        else if (se < 0) r = {CaseLabel::I_c, e, B::divergent, B::divergent, B::divergent, B::divergent, false};
        else if (se == 0) r = {CaseLabel::I_d, e, B::finite_one, B::divergent, B::finite_one, B::divergent, false};
        else r = {CaseLabel::I_e, e, B::vanishes, B::divergent, B::vanishes, B::divergent, false};
    } else if (sa == 0) {
        r = {CaseLabel::II, e, B::divergent, B::divergent, B::divergent, B::divergent, false};
    } else {
        if (se < 0) r = {CaseLabel::III_a, e, B::divergent, B::divergent, B::divergent, B::vanishes, false};
        else if (se == 0) r = {CaseLabel::III_b, e, B::finite_one, B::divergent, B::finite_one, B::vanishes, false};
        else r = {CaseLabel::III_c, e, B::vanishes, B::divergent, B::vanishes, B::vanishes, false};
    }
    r.polynomial_admissible = polynomial_admissible(raw).admissible;
    return r;
}

} // namespace gch
