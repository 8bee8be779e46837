#include "taxicab/recurrence.hpp"

#include <stdexcept>

#include "taxicab/errors.hpp"

namespace taxicab {

const char* sequence_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Fibonacci: return "fibonacci";
    case SequenceKind::Lucas: return "lucas";
    case SequenceKind::NaturalNumbers: return "naturals";
  }
  return "?";
}

namespace {

// Fast doubling: returns (F_n, F_{n+1}).
//   F_{2n}   = F_n * (2 F_{n+1} - F_n)
//   F_{2n+1} = F_n^2 + F_{n+1}^2
std::pair<BigInt, BigInt> fib_pair(std::uint64_t n) {
  if (n == 0) return {BigInt(0), BigInt(1)};
  auto [a, b] = fib_pair(n >> 1);
  BigInt c = a * (2 * b - a);
  BigInt d = a * a + b * b;
  if (n & 1) return {d, c + d};
  return {c, d};
}

}  // namespace

BigInt seq_value(SequenceKind kind, std::uint64_t n) {
  switch (kind) {
    case SequenceKind::NaturalNumbers: {
      BigInt v;
      mpz_set_ui(v.get_mpz_t(), static_cast<unsigned long>(n));
      return v;
    }
    case SequenceKind::Fibonacci:
      return fib_pair(n).first;
    case SequenceKind::Lucas: {
      // L_n = 2 F_{n+1} - F_n
      auto [f, f1] = fib_pair(n);
      return 2 * f1 - f;
    }
  }
  throw std::invalid_argument("seq_value: bad kind");
}

SequenceRange::SequenceRange(SequenceKind kind, std::uint64_t first)
    : kind_(kind), index_(first) {
  if (kind == SequenceKind::NaturalNumbers) {
    cur_ = seq_value(kind, first);
    nxt_ = cur_ + 1;
  } else {
    cur_ = seq_value(kind, first);
    nxt_ = seq_value(kind, first + 1);
  }
}

BigInt SequenceRange::next() {
  BigInt out = cur_;
  if (kind_ == SequenceKind::NaturalNumbers) {
    cur_ = nxt_;
    nxt_ = cur_ + 1;
  } else {
    BigInt sum = cur_ + nxt_;
    cur_ = nxt_;
    nxt_ = sum;
  }
  ++index_;
  return out;
}

QuadExact::QuadExact(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (((p_ - q_) & 1) != 0)
    throw IdentityViolation("QuadExact: p and q must have equal parity");
}

QuadExact QuadExact::alpha() { return QuadExact(BigInt(1), BigInt(1)); }
QuadExact QuadExact::beta() { return QuadExact(BigInt(1), BigInt(-1)); }
QuadExact QuadExact::from_integer(const BigInt& n) { return QuadExact(2 * n, BigInt(0)); }

QuadExact operator+(const QuadExact& a, const QuadExact& b) {
  return QuadExact(a.p_ + b.p_, a.q_ + b.q_);
}

QuadExact operator-(const QuadExact& a, const QuadExact& b) {
  return QuadExact(a.p_ - b.p_, a.q_ - b.q_);
}

QuadExact operator*(const QuadExact& a, const QuadExact& b) {
  // (p1 + q1 s)(p2 + q2 s)/4 with s^2 = 5; both halves below are even
  // whenever the operands satisfy the parity invariant.
  BigInt pp = a.p_ * b.p_ + 5 * (a.q_ * b.q_);
  BigInt qq = a.p_ * b.q_ + a.q_ * b.p_;
  if ((pp & 1) != 0 || (qq & 1) != 0)
    throw IdentityViolation("QuadExact: product left the half-integer lattice");
  return QuadExact(pp / 2, qq / 2);
}

QuadExact quad_power(const QuadExact& base, std::uint64_t n) {
  QuadExact acc = QuadExact::from_integer(BigInt(1));
  QuadExact sq = base;
  while (n > 0) {
    if (n & 1) acc = acc * sq;
    n >>= 1;
    if (n > 0) sq = sq * sq;
  }
  return acc;
}

BigInt binet_check(SequenceKind kind, std::uint64_t n) {
  if (kind == SequenceKind::NaturalNumbers)
    throw std::invalid_argument("binet_check: only Fibonacci/Lucas");
  QuadExact an = quad_power(QuadExact::alpha(), n);
  QuadExact bn = quad_power(QuadExact::beta(), n);
  BigInt expected = seq_value(kind, n);
  if (kind == SequenceKind::Fibonacci) {
    // alpha^n - beta^n = F_n * sqrt5, i.e. (0 + 2 F_n * sqrt5)/2.
    QuadExact d = an - bn;
    if (d.twice_rational_part() != 0)
      throw IdentityViolation("binet_check: rational part of alpha^n - beta^n is nonzero");
    BigInt f = d.twice_sqrt5_coeff() / 2;
    if (2 * f != d.twice_sqrt5_coeff() || f != expected)
      throw IdentityViolation("binet_check: Fibonacci mismatch at n=" + std::to_string(n));
    return f;
  }
  // alpha^n + beta^n = L_n, i.e. (2 L_n + 0 * sqrt5)/2.
  QuadExact s = an + bn;
  if (s.twice_sqrt5_coeff() != 0)
    throw IdentityViolation("binet_check: sqrt5 part of alpha^n + beta^n is nonzero");
  BigInt l = s.twice_rational_part() / 2;
  if (2 * l != s.twice_rational_part() || l != expected)
    throw IdentityViolation("binet_check: Lucas mismatch at n=" + std::to_string(n));
  return l;
}

BigInt fib_cube_via_identity(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("fib_cube_via_identity: n >= 1 required");
  BigInt f3n = seq_value(SequenceKind::Fibonacci, 3 * n);
  BigInt fn = seq_value(SequenceKind::Fibonacci, n);
  BigInt num = (n % 2 == 0) ? BigInt(f3n - 3 * fn) : BigInt(f3n + 3 * fn);
  if (num % 5 != 0)
    throw IdentityViolation("fib_cube_via_identity: numerator not divisible by 5 at n=" +
                            std::to_string(n));
  return num / 5;
}

BigInt lucas_cube_via_identity(std::uint64_t n) {
  BigInt l3n = seq_value(SequenceKind::Lucas, 3 * n);
  BigInt ln = seq_value(SequenceKind::Lucas, n);
  return (n % 2 == 0) ? BigInt(l3n + 3 * ln) : BigInt(l3n - 3 * ln);
}

}  // namespace taxicab
