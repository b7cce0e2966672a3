#pragma once

#include <cmath>

namespace gch {

// Compensated (Neumaier) accumulator. Every series loop in the library goes
// through this because the sums alternate in sign.
class KahanSum {
public:
    KahanSum() = default;
    explicit KahanSum(double init) : sum_(init) {}

    void add(double x) {
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    KahanSum& operator+=(double x) { add(x); return *this; }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct SeriesControl {
    int max_terms = 4000;
    double rel_tol = 1e-17;
    double abs_tol = 1e-300;
};

// Stop once two consecutive terms are below tolerance. One small term alone
// is not trusted since alternating sums can produce an accidental near-zero.
class StopRule {
public:
    explicit StopRule(const SeriesControl& ctl) : ctl_(ctl) {}
    bool small(double term, double partial) {
        if (std::fabs(term) < ctl_.abs_tol + ctl_.rel_tol * std::fabs(partial))
            ++run_;
        else
            run_ = 0;
        return run_ >= 2;
    }

private:
    SeriesControl ctl_;
    int run_ = 0;
};

} // namespace gch
