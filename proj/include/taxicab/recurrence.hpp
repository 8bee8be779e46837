#pragma once

#include <cstdint>
#include <utility>

#include "taxicab/bigint.hpp"

namespace taxicab {

enum class SequenceKind { Fibonacci, Lucas, NaturalNumbers };

const char* sequence_name(SequenceKind kind);

// n-th term, exact. Fibonacci/Lucas use fast doubling; NaturalNumbers is n.
// Seeds: (F0, F1) = (0, 1), (L0, L1) = (2, 1).
BigInt seq_value(SequenceKind kind, std::uint64_t n);

// Streams consecutive terms starting at `first` via the plain recurrence.
// Callers that need a range use this instead of repeated seq_value calls;
// nothing is memoized behind their back.
class SequenceRange {
 public:
  SequenceRange(SequenceKind kind, std::uint64_t first);

  // Term at the current index, then advances by one.
  BigInt next();
  std::uint64_t index() const { return index_; }

 private:
  SequenceKind kind_;
  std::uint64_t index_;
  BigInt cur_;   // S_index
  BigInt nxt_;   // S_{index+1}
};

// Exact element (p + q*sqrt5)/2 of the ring Z[(1+sqrt5)/2].
// Invariant: p == q (mod 2); preserved by all operations.
class QuadExact {
 public:
  QuadExact() : p_(0), q_(0) {}
  QuadExact(BigInt p, BigInt q);

  static QuadExact alpha();                      // (1+sqrt5)/2
  static QuadExact beta();                       // (1-sqrt5)/2
  static QuadExact from_integer(const BigInt& n);

  // Numerators over the common denominator 2.
  const BigInt& twice_rational_part() const { return p_; }
  const BigInt& twice_sqrt5_coeff() const { return q_; }

  bool operator==(const QuadExact& o) const = default;

  QuadExact operator-() const { return QuadExact(-p_, -q_); }
  friend QuadExact operator+(const QuadExact& a, const QuadExact& b);
  friend QuadExact operator-(const QuadExact& a, const QuadExact& b);
  friend QuadExact operator*(const QuadExact& a, const QuadExact& b);

 private:
  BigInt p_, q_;
};

// Exact n-th power by binary exponentiation.
QuadExact quad_power(const QuadExact& base, std::uint64_t n);

// Recomputes the n-th term through Binet's formula in QuadExact and checks
// it against seq_value. Returns the extracted term.
// Throws IdentityViolation on any mismatch.
BigInt binet_check(SequenceKind kind, std::uint64_t n);

// F_n^3 = (F_{3n} + 3*(-1)^{n+1} F_n) / 5 for n >= 1.
// (The coefficient is 3; the coefficient-free variant of this identity
// that sometimes appears in print is wrong, see tests.)
// Throws IdentityViolation if the division by 5 is not exact.
BigInt fib_cube_via_identity(std::uint64_t n);

// Lucas analogue: L_n^3 = L_{3n} + 3*(-1)^n L_n for n >= 0.
BigInt lucas_cube_via_identity(std::uint64_t n);

}  // namespace taxicab
