#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "taxicab/bigint.hpp"
#include "taxicab/dyadic.hpp"
#include "taxicab/errors.hpp"

namespace taxicab {

enum class ConstantId { Alpha, AbsBeta, Sqrt5, LogAlpha, Log5, LogAbsBeta, Log5Sqrt5 };

ConstantId constant_from_name(const std::string& name);
const char* constant_name(ConstantId id);

enum class Order { Less, Greater, Unknown };

// Arbitrary-precision real as midpoint +/- radius. Every operation
// returns a ball containing the exact image of every point of its input
// balls (outward rounding). `prec` is the working bit count used when
// rounding results; it never affects containment, only tightness.
class Ball {
 public:
  Ball() : mid_(), rad_(), prec_(kDefaultPrec) {}

  static Ball exact(Dyadic d, std::size_t prec);
  static Ball exact_int(const BigInt& n, std::size_t prec);
  static Ball from_interval(const Dyadic& lo, const Dyadic& hi, std::size_t prec);
  static Ball from_rational(const BigInt& num, const BigInt& den, std::size_t prec);
  // Exact decimal/scientific literal ("0.156", "1.54e28", "-3"), treated
  // as the rational it denotes.
  static Ball from_decimal(const std::string& text, std::size_t prec);

  const Dyadic& mid() const { return mid_; }
  const Dyadic& rad() const { return rad_; }
  std::size_t prec() const { return prec_; }
  Dyadic lower() const { return mid_ - rad_; }
  Dyadic upper() const { return mid_ + rad_; }

  bool is_exact() const { return rad_.is_zero(); }
  bool contains_zero() const { return lower().sign() <= 0 && upper().sign() >= 0; }
  bool contains(const Dyadic& x) const { return lower() <= x && x <= upper(); }
  // -1, +1 when the ball certifiably excludes zero, 0 otherwise.
  int certain_sign() const;

  Ball operator-() const;
  Ball abs_val() const;
  Ball mul_pow2(std::int64_t e) const;
  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);

  // Throws DomainError when the ball straddles 0.
  Ball recip() const;
  // Integer power; negative k via recip. pow(0) is the exact 1.
  Ball pow(std::int64_t k) const;
  // Throws DomainError unless the ball is certifiably >= 0 (sqrt) or > 0 (log).
  Ball sqrt_val() const;
  Ball log_val() const;
  Ball exp_val() const;

  // Distance to the nearest integer, in [0, 1/2]. Throws
  // StraddlesHalfInteger when the ball does not fit inside
  // [z - 1/2, z + 1/2] for a single integer z.
  Ball nearest_int_distance() const;

  static Order cmp_certified(const Ball& a, const Ball& b);
  bool certainly_positive() const { return lower().sign() > 0; }
  bool certainly_negative() const { return upper().sign() < 0; }
  bool certainly_less(const Ball& o) const { return upper() < o.lower(); }
  bool certainly_le(const Ball& o) const { return upper() <= o.lower(); }
  bool overlaps(const Ball& o) const { return !(certainly_less(o) || o.certainly_less(*this)); }

  // Floor shared by every point of the ball; throws PrecisionExhausted
  // when the ball straddles an integer.
  BigInt floor_certified() const;

  Ball with_prec(std::size_t prec) const;
  std::string to_decimal(std::size_t digits) const { return mid_.to_decimal(digits); }

  static constexpr std::size_t kDefaultPrec = 256;

 private:
  Ball(Dyadic mid, Dyadic rad, std::size_t prec)
      : mid_(std::move(mid)), rad_(std::move(rad)), prec_(prec) {}
  // Rounds mid to prec bits and rad up to a short mantissa, keeping containment.
  void normalize();

  Dyadic mid_, rad_;
  std::size_t prec_;
};

// Certified enclosure of a library constant; radius <= 2^(1-bits).
Ball constant(ConstantId id, std::size_t bits);

// Enclosure of log(2) at the given precision (cached).
Ball log2_ball(std::size_t bits);

// Precision-escalation driver: runs fn(bits) starting at start_bits,
// doubling on StraddlesHalfInteger/PrecisionExhausted up to the cap.
inline constexpr std::size_t kMaxPrecisionBits = std::size_t(1) << 20;

template <typename F>
auto with_precision_escalation(std::size_t start_bits, F&& fn) {
  std::size_t bits = start_bits < 8 ? 8 : start_bits;
  for (;;) {
    try {
      return fn(bits);
    } catch (const StraddlesHalfInteger&) {
    } catch (const PrecisionExhausted&) {
    }
    if (bits >= kMaxPrecisionBits)
      throw PrecisionExhausted("precision escalation cap (2^20 bits) reached");
    bits *= 2;
  }
}

}  // namespace taxicab
