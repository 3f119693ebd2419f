#pragma once
#include <stdexcept>
#include <string>

namespace qdilog {

// Base of every error thrown by the library. CLI maps subclasses to exit
// codes: domain/pole -> 3, non-convergence/divergence -> 4.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidPrecisionError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// Evaluation requested at (or too close to) a pole of the function.
class PoleError : public DomainError {
public:
    PoleError(const std::string& what, long pole_index)
        : DomainError(what), pole_index_(pole_index) {}
    long pole_index() const { return pole_index_; }

private:
    long pole_index_;
};

// A series or quadrature refinement hit its iteration cap before meeting
// tolerance. Carries how far it got.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& what, long terms, const std::string& partial)
        : Error(what), terms_(terms), partial_(partial) {}
    long terms() const { return terms_; }
    const std::string& partial_value() const { return partial_; }

private:
    long terms_;
    std::string partial_;
};

// Contour samples grow instead of decaying.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// Residue quadrature unstable under radius halving: higher-order pole or a
// nearby singularity inside the contour.
class ResidueInstabilityError : public Error {
public:
    using Error::Error;
};

// Inputs unusable for a fit (too few points, zeros, precision floor).
class UnusableDataError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace qdilog
