#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "nlk3/arith.hpp"

namespace nlk3 {

// An argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A (d, n) pair that does not define an irreducible divisor: either n is
// odd (no even-lattice vector has odd self-intersection) or the
// discriminant d^2 - (2g-2)n is not positive.
class InvalidDivisor : public DomainError {
 public:
  enum class Reason { odd_self_intersection, nonpositive_discriminant };

  InvalidDivisor(Reason reason, const std::string& what)
      : DomainError(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// Two quantities attached to different genera were combined.
class GenusMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

// The source class of a decomposition is not a valid even class of
// positive discriminant.
class InvalidSource : public DomainError {
 public:
  using DomainError::DomainError;
};

// A genus outside the fixed catalog range {6, ..., 10, 12}.
class UnsupportedGenus : public DomainError {
 public:
  using DomainError::DomainError;
};

// The rank formula evaluated to a non-integer. This cannot happen for a
// correct transcription of the formula, so it is surfaced loudly rather
// than rounded; the offending rational is carried for diagnostics.
class NonIntegralRho : public std::runtime_error {
 public:
  NonIntegralRho(const std::string& what, Rat value)
      : std::runtime_error(what), value_(std::move(value)) {}
  const Rat& value() const { return value_; }

 private:
  Rat value_;
};

}  // namespace nlk3
