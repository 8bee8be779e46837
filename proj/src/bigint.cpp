#include "taxicab/bigint.hpp"

#include <cctype>
#include <cstdlib>

#include "taxicab/errors.hpp"

namespace taxicab {

mpq_class parse_decimal_rational(const std::string& text) {
  const char* s = text.c_str();
  std::size_t i = 0, n = text.size();
  bool neg = false;
  if (i < n && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  std::string digits;
  long frac_len = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < n; ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i];
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else if (s[i] == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw DomainError("not a decimal literal: '" + text + "'");
  long exp10 = 0;
  if (i < n && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < n && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
    if (i >= n || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw DomainError("bad exponent in decimal literal: '" + text + "'");
    std::string edig;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) edig += s[i++];
    exp10 = std::strtol(edig.c_str(), nullptr, 10);
    if (eneg) exp10 = -exp10;
  }
  if (i != n) throw DomainError("trailing junk in decimal literal: '" + text + "'");

  BigInt num(digits.empty() ? "0" : digits, 10);
  if (neg) num = -num;
  BigInt den = 1;
  long net = exp10 - frac_len;
  BigInt ten10 = pow_int(BigInt(10), static_cast<unsigned long>(net >= 0 ? net : -net));
  if (net >= 0)
    num *= ten10;
  else
    den = ten10;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

BigInt parse_bigint(const std::string& text) {
  mpq_class q = parse_decimal_rational(text);
  if (q.get_den() != 1)
    throw DomainError("expected an integer, got non-integral value: '" + text + "'");
  return q.get_num();
}

}  // namespace taxicab
