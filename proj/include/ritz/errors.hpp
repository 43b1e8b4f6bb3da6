#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ritz {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration (precision below the floor, bad basis size, ...).
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Two scalars bound to different precision contexts met in one operation.
class PrecisionMismatchError : public Error {
  public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class MathDomainError : public Error {
  public:
    using Error::Error;
};

/// Malformed potential expression; `position` is the offset of the offending
/// character in the input string.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// Potential violates the growth condition required for asymptotic analysis.
class UnsupportedPotentialError : public Error {
  public:
    using Error::Error;
};

/// Inconsistent basis specification (family/parity mismatch, bad sector, ...).
class BasisSpecError : public Error {
  public:
    using Error::Error;
};

/// Matrix assembly failed (parity mismatch, exponent range overflow, ...).
class AssemblyError : public Error {
  public:
    using Error::Error;
};

/// Quadrature failed to converge within the level cap.
class QuadratureError : public Error {
  public:
    using Error::Error;
};

/// Iterative eigensolver exceeded its sweep cap.
class ConvergenceError : public Error {
  public:
    using Error::Error;
};

/// Cholesky factorization of the overlap matrix hit a nonpositive pivot.
/// Carries the failing pivot index and a precision-increase hint.
class OverlapNotPositiveDefiniteError : public Error {
  public:
    OverlapNotPositiveDefiniteError(int pivot_index, int current_digits)
        : Error("overlap matrix not positive definite at working precision: "
                "Cholesky pivot " +
                std::to_string(pivot_index) +
                " is nonpositive; retry with more than " +
                std::to_string(current_digits) + " digits"),
          pivot_index_(pivot_index),
          current_digits_(current_digits) {}

    int pivot_index() const { return pivot_index_; }
    int current_digits() const { return current_digits_; }

  private:
    int pivot_index_;
    int current_digits_;
};

/// Auto-precision escalation ran out of headroom.  Carries the overlap
/// condition estimate of the last failed attempt as a decimal string.
class PrecisionExhaustedError : public Error {
  public:
    PrecisionExhaustedError(const std::string& what, std::string condition_estimate)
        : Error(what), condition_estimate_(std::move(condition_estimate)) {}

    const std::string& condition_estimate() const { return condition_estimate_; }

  private:
    std::string condition_estimate_;
};

} // namespace ritz
