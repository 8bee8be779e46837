#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace taxicab {

// Base class for all toolkit failures, so callers can catch one type.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An exact algebraic identity failed to hold. Always indicates an
// arithmetic bug (or a deliberately wrong identity under test).
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

// Operation applied outside its domain (log/div of a ball straddling 0,
// majorant requested out of its validity regime, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A ball is too wide to assign a unique nearest integer. Callers raise
// the working precision and retry.
class StraddlesHalfInteger : public Error {
 public:
  using Error::Error;
};

// A certified decision could not be made at the current precision, or
// the escalation cap was reached.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

// A claimed inequality failed at a concrete index.
class BoundViolation : public Error {
 public:
  BoundViolation(const std::string& what, std::uint64_t witness)
      : Error(what + " (witness n=" + std::to_string(witness) + ")"), witness_(witness) {}
  std::uint64_t witness() const { return witness_; }

 private:
  std::uint64_t witness_;
};

// Dujella-Petho reduction: no tried convergent produced a positive epsilon.
class EpsilonNeverPositive : public Error {
 public:
  using Error::Error;
};

// Fixed-point iteration failed to settle within its step budget.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

}  // namespace taxicab
