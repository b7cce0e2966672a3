#pragma once

#include <stdexcept>
#include <string>

namespace gch {

enum class ErrorKind {
    pole,
    domain,
    divergence,
    non_convergence,
    precondition,
    resonance,
    case_mismatch,
    zero_crossing,
    tolerance,
    unsupported,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::pole: return "pole";
    case ErrorKind::domain: return "domain";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::non_convergence: return "non_convergence";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::resonance: return "resonance";
    case ErrorKind::case_mismatch: return "case_mismatch";
    case ErrorKind::zero_crossing: return "zero_crossing";
    case ErrorKind::tolerance: return "tolerance";
    case ErrorKind::unsupported: return "unsupported";
    }
    return "unknown";
}

// Base of every library exception. `field` names the offending input and
// `constraint` states what it violated, so the CLI can serialize both.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string field, std::string constraint, const std::string& message)
        : std::runtime_error(message), kind_(kind), field_(std::move(field)), constraint_(std::move(constraint)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& field() const noexcept { return field_; }
    const std::string& constraint() const noexcept { return constraint_; }

private:
    ErrorKind kind_;
    std::string field_;
    std::string constraint_;
};

class PoleError : public Error {
public:
    PoleError(std::string field, const std::string& message)
        : Error(ErrorKind::pole, std::move(field), "not a pole of the gamma function", message) {}
};

class DomainError : public Error {
public:
    DomainError(std::string field, std::string constraint, const std::string& message)
        : Error(ErrorKind::domain, std::move(field), std::move(constraint), message) {}
};

class DivergenceError : public Error {
public:
    DivergenceError(std::string field, const std::string& message)
        : Error(ErrorKind::divergence, std::move(field), "|z| < 1 or terminating series", message) {}
};

// Carries the last partial result so callers can inspect how far the sum got.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& message, double best_estimate, int terms)
        : Error(ErrorKind::non_convergence, "max_terms", "tolerance met within max_terms", message),
          best_estimate_(best_estimate), terms_(terms) {}
    double best_estimate() const noexcept { return best_estimate_; }
    int terms() const noexcept { return terms_; }

private:
    double best_estimate_;
    int terms_;
};

class PreconditionError : public Error {
public:
    PreconditionError(std::string field, std::string constraint, const std::string& message)
        : Error(ErrorKind::precondition, std::move(field), std::move(constraint), message) {}
};

class ResonanceError : public Error {
public:
    ResonanceError(int n, double lambda, const std::string& message)
        : Error(ErrorKind::resonance, "lambda", "recurrence denominator nonzero", message), n_(n), lambda_(lambda) {}
    int index() const noexcept { return n_; }
    double lambda() const noexcept { return lambda_; }

private:
    int n_;
    double lambda_;
};

class CaseMismatchError : public Error {
public:
    CaseMismatchError(std::string constraint, const std::string& message)
        : Error(ErrorKind::case_mismatch, "case", std::move(constraint), message) {}
};

class ZeroCrossingError : public Error {
public:
    ZeroCrossingError(double a, double b, const std::string& message)
        : Error(ErrorKind::zero_crossing, "g1", "no zero inside the integration range", message), a_(a), b_(b) {}
    double lower() const noexcept { return a_; }
    double upper() const noexcept { return b_; }

private:
    double a_;
    double b_;
};

class ToleranceError : public Error {
public:
    ToleranceError(const std::string& message, double best_estimate, double error_estimate)
        : Error(ErrorKind::tolerance, "tol", "error estimate within tolerance", message),
          best_estimate_(best_estimate), error_estimate_(error_estimate) {}
    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

class UnsupportedError : public Error {
public:
    UnsupportedError(std::string field, std::string constraint, const std::string& message)
        : Error(ErrorKind::unsupported, std::move(field), std::move(constraint), message) {}
};

} // namespace gch
