#include "taxicab/dyadic.hpp"

#include <cmath>
#include <stdexcept>

#include "taxicab/errors.hpp"

namespace taxicab {

void Dyadic::normalize() {
  if (mant_ == 0) {
    exp2_ = 0;
    return;
  }
  mp_bitcnt_t tz = mpz_scan1(mant_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), tz);
    exp2_ += static_cast<std::int64_t>(tz);
  }
}

std::size_t Dyadic::bit_length() const {
  if (mant_ == 0) return 0;
  return mpz_sizeinbase(mant_.get_mpz_t(), 2);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t e = std::min(a.exp2_, b.exp2_);
  BigInt ma = a.mant_ << static_cast<unsigned long>(a.exp2_ - e);
  BigInt mb = b.mant_ << static_cast<unsigned long>(b.exp2_ - e);
  return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) return Dyadic();
  return Dyadic(a.mant_ * b.mant_, a.exp2_ + b.exp2_);
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  Dyadic d = a - b;
  return d.sign();
}

BigInt Dyadic::floor() const {
  BigInt r;
  if (exp2_ >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(exp2_));
  } else {
    mpz_fdiv_q_2exp(r.get_mpz_t(), mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp2_));
  }
  return r;
}

BigInt Dyadic::ceil() const {
  BigInt r;
  if (exp2_ >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(exp2_));
  } else {
    mpz_cdiv_q_2exp(r.get_mpz_t(), mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp2_));
  }
  return r;
}

BigInt Dyadic::round_nearest() const { return (*this + half()).floor(); }

Dyadic Dyadic::round_to(std::size_t prec_bits, Rounding dir, bool* inexact) const {
  if (inexact) *inexact = false;
  if (prec_bits == 0) throw std::invalid_argument("Dyadic::round_to: prec_bits must be > 0");
  std::size_t bl = bit_length();
  if (bl <= prec_bits) return *this;
  mp_bitcnt_t shift = static_cast<mp_bitcnt_t>(bl - prec_bits);
  BigInt q;
  if (dir == Rounding::Down) {
    mpz_fdiv_q_2exp(q.get_mpz_t(), mant_.get_mpz_t(), shift);
  } else {
    mpz_cdiv_q_2exp(q.get_mpz_t(), mant_.get_mpz_t(), shift);
  }
  Dyadic out(q, exp2_ + static_cast<std::int64_t>(shift));
  if (inexact) *inexact = (Dyadic::cmp(out, *this) != 0);
  return out;
}

double Dyadic::to_double() const {
  if (mant_ == 0) return 0.0;
  signed long e = 0;
  double m = mpz_get_d_2exp(&e, mant_.get_mpz_t());
  return std::ldexp(m, static_cast<int>(e + exp2_));
}

std::string Dyadic::to_decimal(std::size_t digits) const {
  if (digits == 0) digits = 1;
  if (mant_ == 0) return "0";
  // Deterministic conversion through mpf at ample precision.
  mpf_class f(0, static_cast<mp_bitcnt_t>(bit_length() + 4 * digits + 64));
  mpf_set_z(f.get_mpf_t(), mant_.get_mpz_t());
  if (exp2_ >= 0) {
    mpf_mul_2exp(f.get_mpf_t(), f.get_mpf_t(), static_cast<mp_bitcnt_t>(exp2_));
  } else {
    mpf_div_2exp(f.get_mpf_t(), f.get_mpf_t(), static_cast<mp_bitcnt_t>(-exp2_));
  }
  mp_exp_t exp10 = 0;
  std::string mantissa = f.get_str(exp10, 10, digits);
  std::string sign;
  if (!mantissa.empty() && mantissa[0] == '-') {
    sign = "-";
    mantissa = mantissa.substr(1);
  }
  while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();
  std::string head = mantissa.substr(0, 1);
  std::string tail = mantissa.size() > 1 ? mantissa.substr(1) : "";
  std::string out = sign + head;
  if (!tail.empty()) out += "." + tail;
  out += "e" + std::to_string(static_cast<long long>(exp10) - 1);
  return out;
}

Dyadic div_dir(const Dyadic& a, const Dyadic& b, std::size_t prec_bits, Rounding dir) {
  if (b.is_zero()) throw DomainError("div_dir: division by zero");
  if (a.is_zero()) return Dyadic();
  std::size_t bla = a.bit_length(), blb = b.bit_length();
  std::size_t s = prec_bits + 4 + (blb > bla ? blb - bla : 0);
  BigInt num = a.mantissa() << static_cast<unsigned long>(s);
  BigInt q;
  if (dir == Rounding::Down) {
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mantissa().get_mpz_t());
  } else {
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mantissa().get_mpz_t());
  }
  Dyadic out(q, a.exponent() - b.exponent() - static_cast<std::int64_t>(s));
  return out.round_to(prec_bits, dir);
}

Dyadic sqrt_dir(const Dyadic& d, std::size_t prec_bits, Rounding dir) {
  if (d.sign() < 0) throw DomainError("sqrt_dir: negative argument");
  if (d.is_zero()) return Dyadic();
  // Write d = N * 2^(e - shift) with N = mant << shift an integer of
  // ~2*prec_bits bits and e - shift even; then sqrt(d) = sqrt(N) * 2^((e-shift)/2).
  std::int64_t e = d.exponent();
  std::int64_t shift = 2 * static_cast<std::int64_t>(prec_bits) + 4 -
                       static_cast<std::int64_t>(d.bit_length());
  if (shift < 0) shift = 0;
  if ((e - shift) % 2 != 0) ++shift;
  BigInt n = d.mantissa() << static_cast<unsigned long>(shift);
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (dir == Rounding::Up && r * r != n) r += 1;
  Dyadic out(r, (e - shift) / 2);
  return out.round_to(prec_bits, dir);
}

}  // namespace taxicab
