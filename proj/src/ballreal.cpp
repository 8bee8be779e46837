#include "taxicab/ballreal.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>

namespace taxicab {

ConstantId constant_from_name(const std::string& name) {
  if (name == "alpha") return ConstantId::Alpha;
  if (name == "abs_beta") return ConstantId::AbsBeta;
  if (name == "sqrt5") return ConstantId::Sqrt5;
  if (name == "log_alpha") return ConstantId::LogAlpha;
  if (name == "log5") return ConstantId::Log5;
  if (name == "log_abs_beta") return ConstantId::LogAbsBeta;
  if (name == "log_5sqrt5") return ConstantId::Log5Sqrt5;
  throw DomainError("unknown constant: " + name);
}

const char* constant_name(ConstantId id) {
  switch (id) {
    case ConstantId::Alpha: return "alpha";
    case ConstantId::AbsBeta: return "abs_beta";
    case ConstantId::Sqrt5: return "sqrt5";
    case ConstantId::LogAlpha: return "log_alpha";
    case ConstantId::Log5: return "log5";
    case ConstantId::LogAbsBeta: return "log_abs_beta";
    case ConstantId::Log5Sqrt5: return "log_5sqrt5";
  }
  return "?";
}

void Ball::normalize() {
  assert(rad_.sign() >= 0);
  Dyadic rounded = mid_.round_to(prec_, Rounding::Down);
  Dyadic err = mid_ - rounded;  // in [0, ulp)
  mid_ = rounded;
  if (!err.is_zero()) rad_ = rad_ + err;
  rad_ = rad_.round_to(32, Rounding::Up);
}

Ball Ball::exact(Dyadic d, std::size_t prec) {
  // No rounding: exact dyadics stay exact regardless of prec.
  return Ball(std::move(d), Dyadic(), prec);
}

Ball Ball::exact_int(const BigInt& n, std::size_t prec) {
  return Ball(Dyadic::from_integer(n), Dyadic(), prec);
}

Ball Ball::from_interval(const Dyadic& lo, const Dyadic& hi, std::size_t prec) {
  if (hi < lo) throw std::invalid_argument("Ball::from_interval: hi < lo");
  Ball b((lo + hi).mul_pow2(-1), (hi - lo).mul_pow2(-1), prec);
  b.normalize();
  return b;
}

Ball Ball::from_rational(const BigInt& num, const BigInt& den, std::size_t prec) {
  if (den == 0) throw DomainError("Ball::from_rational: zero denominator");
  Dyadic n = Dyadic::from_integer(num);
  Dyadic d = Dyadic::from_integer(den);
  return from_interval(div_dir(n, d, prec + 2, Rounding::Down),
                       div_dir(n, d, prec + 2, Rounding::Up), prec);
}

Ball Ball::from_decimal(const std::string& text, std::size_t prec) {
  mpq_class q = parse_decimal_rational(text);
  return from_rational(q.get_num(), q.get_den(), prec);
}

int Ball::certain_sign() const {
  if (lower().sign() > 0) return 1;
  if (upper().sign() < 0) return -1;
  return 0;
}

Ball Ball::operator-() const { return Ball(-mid_, rad_, prec_); }

Ball Ball::abs_val() const {
  Dyadic lo = lower(), hi = upper();
  if (lo.sign() >= 0) return *this;
  if (hi.sign() <= 0) return -*this;
  Dyadic m = std::max(-lo, hi);
  return from_interval(Dyadic(), m, prec_);
}

Ball Ball::mul_pow2(std::int64_t e) const {
  return Ball(mid_.mul_pow2(e), rad_.mul_pow2(e), prec_);
}

Ball operator+(const Ball& a, const Ball& b) {
  Ball r(a.mid_ + b.mid_, a.rad_ + b.rad_, std::max(a.prec_, b.prec_));
  r.normalize();
  return r;
}

Ball operator-(const Ball& a, const Ball& b) { return a + (-b); }

Ball operator*(const Ball& a, const Ball& b) {
  Dyadic mid = a.mid_ * b.mid_;
  Dyadic rad = a.mid_.abs() * b.rad_ + b.mid_.abs() * a.rad_ + a.rad_ * b.rad_;
  Ball r(std::move(mid), std::move(rad), std::max(a.prec_, b.prec_));
  r.normalize();
  return r;
}

Ball Ball::recip() const {
  if (certain_sign() == 0) throw DomainError("Ball::recip: ball straddles zero");
  Dyadic one(1);
  Dyadic lo = div_dir(one, upper(), prec_ + 2, Rounding::Down);
  Dyadic hi = div_dir(one, lower(), prec_ + 2, Rounding::Up);
  return from_interval(lo, hi, prec_);
}

Ball operator/(const Ball& a, const Ball& b) { return a * b.recip(); }

Ball Ball::pow(std::int64_t k) const {
  if (k < 0) return pow(-k).recip();
  Ball acc = exact(Dyadic(1), prec_);
  Ball sq = *this;
  std::uint64_t e = static_cast<std::uint64_t>(k);
  while (e > 0) {
    if (e & 1) acc = acc * sq;
    e >>= 1;
    if (e > 0) sq = sq * sq;
  }
  return acc;
}

Ball Ball::sqrt_val() const {
  if (lower().sign() < 0) throw DomainError("Ball::sqrt_val: ball extends below zero");
  return from_interval(sqrt_dir(lower(), prec_ + 2, Rounding::Down),
                       sqrt_dir(upper(), prec_ + 2, Rounding::Up), prec_);
}

namespace {

// log of an exact positive dyadic, via the atanh series
//   log f = 2 * (y + y^3/3 + y^5/5 + ...),  y = (f-1)/(f+1)
// applied to f in [1/2, 1) so |y| <= 1/3, plus an exact multiple of log 2.
Ball point_log(const Dyadic& d, std::size_t prec) {
  if (d.sign() <= 0) throw DomainError("log of non-positive value");
  if (d == Dyadic(1)) return Ball::exact(Dyadic(), prec);
  std::size_t workp = prec + 32;
  std::int64_t bl = static_cast<std::int64_t>(d.bit_length());
  std::int64_t t = d.exponent() + bl;  // d = f * 2^t, f in [1/2, 1)
  Dyadic f(d.mantissa(), -bl);
  Dyadic num = f - Dyadic(1);
  Dyadic den = f + Dyadic(1);
  Ball y = Ball::from_interval(div_dir(num, den, workp, Rounding::Down),
                               div_dir(num, den, workp, Rounding::Up), workp);
  Ball y2 = y * y;
  Ball term = y;
  Ball sum = y;
  Dyadic ymax = y.abs_val().upper().round_to(32, Rounding::Up);
  Dyadic y2max = (ymax * ymax).round_to(32, Rounding::Up);
  Dyadic powmax = ymax;
  Dyadic threshold = Dyadic::pow2(-static_cast<std::int64_t>(workp));
  for (unsigned long j = 1;; ++j) {
    term = term * y2;
    sum = sum + term / Ball::exact_int(BigInt(2 * j + 1), workp);
    powmax = (powmax * y2max).round_to(32, Rounding::Up);
    // tail <= |y|^(2j+3) / ((2j+3)(1-y^2)) <= powmax * y2max * 9/8
    Dyadic tail = (powmax * y2max * Dyadic(BigInt(9), -3)).round_to(32, Rounding::Up);
    if (tail < threshold) {
      sum = sum + Ball::from_interval(-tail, tail, workp);
      break;
    }
    if (j > 64 * workp) throw PrecisionExhausted("point_log: series did not converge");
  }
  Ball result = sum.mul_pow2(1);
  if (t != 0) result = result + Ball::exact_int(BigInt(static_cast<long>(t)), workp) * log2_ball(workp + 8);
  return result.with_prec(prec);
}

// exp of an exact dyadic: argument reduction by log 2, then the power series.
Ball point_exp(const Dyadic& d, std::size_t prec) {
  if (d.is_zero()) return Ball::exact(Dyadic(1), prec);
  if (Dyadic::pow2(24) < d.abs())
    throw DomainError("point_exp: |argument| too large");
  std::size_t workp = prec + 32;
  Ball log2b = log2_ball(workp + 8);
  BigInt n = div_dir(d, log2b.mid(), 64, Rounding::Down).round_nearest();
  std::int64_t nl = static_cast<std::int64_t>(n.get_si());
  Ball r = Ball::exact(d, workp) - Ball::exact_int(n, workp) * log2b;  // |r| <= ~0.35
  Ball term = Ball::exact(Dyadic(1), workp);
  Ball sum = term;
  Dyadic threshold = Dyadic::pow2(-static_cast<std::int64_t>(workp));
  for (unsigned long j = 1;; ++j) {
    term = term * r / Ball::exact_int(BigInt(j), workp);
    sum = sum + term;
    Dyadic tb = term.abs_val().upper().round_to(32, Rounding::Up);
    if (j >= 2 && tb < threshold) {
      // tail after term j is < |term_j| for |r| < 1/2 and j >= 2
      sum = sum + Ball::from_interval(-tb, tb, workp);
      break;
    }
    if (j > 64 * workp) throw PrecisionExhausted("point_exp: series did not converge");
  }
  return sum.mul_pow2(nl).with_prec(prec);
}

}  // namespace

Ball Ball::log_val() const {
  if (lower().sign() <= 0) throw DomainError("Ball::log_val: ball not strictly positive");
  if (is_exact()) return point_log(mid_, prec_);
  Ball lo = point_log(lower(), prec_);
  Ball hi = point_log(upper(), prec_);
  return from_interval(lo.lower(), hi.upper(), prec_);
}

Ball Ball::exp_val() const {
  if (is_exact()) return point_exp(mid_, prec_);
  Ball lo = point_exp(lower(), prec_);
  Ball hi = point_exp(upper(), prec_);
  return from_interval(lo.lower(), hi.upper(), prec_);
}

Ball Ball::nearest_int_distance() const {
  BigInt z = mid_.round_nearest();
  Dyadic zd = Dyadic::from_integer(z);
  Dyadic half = Dyadic::half();
  Dyadic lo = lower(), hi = upper();
  if (lo < zd - half || zd + half < hi)
    throw StraddlesHalfInteger("nearest_int_distance: ball wider than half-integer window");
  Dyadic dlo, dhi;
  if (lo <= zd && zd <= hi) {
    dlo = Dyadic();
    dhi = std::max(zd - lo, hi - zd);
  } else if (hi < zd) {
    dlo = zd - hi;
    dhi = zd - lo;
  } else {
    dlo = lo - zd;
    dhi = hi - zd;
  }
  return from_interval(dlo, dhi, prec_);
}

Order Ball::cmp_certified(const Ball& a, const Ball& b) {
  if (a.upper() < b.lower()) return Order::Less;
  if (b.upper() < a.lower()) return Order::Greater;
  return Order::Unknown;
}

BigInt Ball::floor_certified() const {
  BigInt f1 = lower().floor();
  BigInt f2 = upper().floor();
  if (f1 != f2)
    throw PrecisionExhausted("floor_certified: ball straddles an integer");
  return f1;
}

Ball Ball::with_prec(std::size_t prec) const {
  Ball b(mid_, rad_, prec);
  b.normalize();
  return b;
}

Ball log2_ball(std::size_t bits) {
  static std::mutex mu;
  static std::map<std::size_t, Ball> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bits);
    if (it != cache.end()) return it->second;
  }
  // log(1/2) has t = 0 in point_log's reduction, so this does not recurse.
  Ball v = -point_log(Dyadic::half(), bits);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(bits, v);
  return v;
}

Ball constant(ConstantId id, std::size_t bits) {
  if (bits < 64) throw std::invalid_argument("constant: bits >= 64 required");
  std::size_t p = bits + 16;
  auto sqrt5 = [&] {
    return Ball::from_interval(sqrt_dir(Dyadic(5), p, Rounding::Down),
                               sqrt_dir(Dyadic(5), p, Rounding::Up), bits + 8);
  };
  switch (id) {
    case ConstantId::Sqrt5:
      return sqrt5();
    case ConstantId::Alpha:
      return (sqrt5() + Ball::exact(Dyadic(1), bits + 8)).mul_pow2(-1);
    case ConstantId::AbsBeta:
      return (sqrt5() - Ball::exact(Dyadic(1), bits + 8)).mul_pow2(-1);
    case ConstantId::LogAlpha:
      return constant(ConstantId::Alpha, bits + 8).log_val().with_prec(bits + 8);
    case ConstantId::Log5:
      return Ball::exact(Dyadic(5), bits + 8).log_val();
    case ConstantId::LogAbsBeta:
      return constant(ConstantId::AbsBeta, bits + 8).log_val().with_prec(bits + 8);
    case ConstantId::Log5Sqrt5:
      // log(5 sqrt5) = (3/2) log 5
      return (Ball::exact(Dyadic(5), bits + 8).log_val() * Ball::exact(Dyadic(3), bits + 8))
          .mul_pow2(-1);
  }
  throw std::invalid_argument("constant: bad id");
}

}  // namespace taxicab
