#pragma once

#include <cstdint>
#include <string>

#include "taxicab/bigint.hpp"

namespace taxicab {

enum class Rounding { Down, Up };  // toward -inf / toward +inf

// Exact dyadic rational mant * 2^exp2. Canonical form: mant odd or zero
// (zero has exp2 == 0). All arithmetic here is exact; rounding happens
// only through round_to()/div_dir()/sqrt_dir().
class Dyadic {
 public:
  Dyadic() : mant_(0), exp2_(0) {}
  explicit Dyadic(long v) : mant_(v), exp2_(0) { normalize(); }
  Dyadic(BigInt mant, std::int64_t exp2) : mant_(std::move(mant)), exp2_(exp2) { normalize(); }

  static Dyadic from_integer(const BigInt& n) { return Dyadic(n, 0); }
  static Dyadic pow2(std::int64_t e) { return Dyadic(BigInt(1), e); }
  static Dyadic half() { return Dyadic(BigInt(1), -1); }

  bool is_zero() const { return mant_ == 0; }
  int sign() const { return sgn(mant_); }
  const BigInt& mantissa() const { return mant_; }
  std::int64_t exponent() const { return exp2_; }
  // Bits in |mant|; 0 for zero.
  std::size_t bit_length() const;

  Dyadic operator-() const { return Dyadic(-mant_, exp2_); }
  Dyadic abs() const { return Dyadic(::abs(mant_), exp2_); }
  Dyadic mul_pow2(std::int64_t e) const { return is_zero() ? *this : Dyadic(mant_, exp2_ + e); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  static int cmp(const Dyadic& a, const Dyadic& b);
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }

  BigInt floor() const;
  BigInt ceil() const;
  // Nearest integer, ties toward +inf (= floor(x + 1/2)).
  BigInt round_nearest() const;
  bool is_integer() const { return is_zero() || exp2_ >= 0; }

  // Keeps at most prec_bits significant bits, rounding in `dir`.
  Dyadic round_to(std::size_t prec_bits, Rounding dir, bool* inexact = nullptr) const;

  double to_double() const;  // best effort, diagnostics only
  // Scientific decimal with `digits` significant digits, e.g. "4.81212e-1".
  std::string to_decimal(std::size_t digits) const;

 private:
  void normalize();
  BigInt mant_;
  std::int64_t exp2_;
};

// a / b to prec_bits significant bits, rounded in `dir`. b must be nonzero.
Dyadic div_dir(const Dyadic& a, const Dyadic& b, std::size_t prec_bits, Rounding dir);

// sqrt(d) to prec_bits significant bits, rounded in `dir`. d must be >= 0.
Dyadic sqrt_dir(const Dyadic& d, std::size_t prec_bits, Rounding dir);

}  // namespace taxicab
