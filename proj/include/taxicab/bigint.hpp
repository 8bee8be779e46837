#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace taxicab {

// Exact signed integer of arbitrary size. Backed by GMP; mpz keeps the
// canonical form (no leading zero limbs, zero is non-negative) for us.
using BigInt = mpz_class;

inline BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

// Parses a decimal literal, optionally with fraction and exponent
// ("0.156", "1.54e28", "-3"), as the exact rational it denotes.
mpq_class parse_decimal_rational(const std::string& text);

// Parses a decimal integer, optionally in scientific form ("6.17e28").
// Throws DomainError unless the value is an exact integer.
BigInt parse_bigint(const std::string& text);

}  // namespace taxicab
