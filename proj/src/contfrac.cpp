#include "taxicab/contfrac.hpp"

#include <stdexcept>

namespace taxicab {

CFExpansion expand(const Ball& x, const CFStop& stop, std::size_t max_terms) {
  CFExpansion cf;
  Ball cur = x;
  BigInt p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
  BigInt p = 0, q = 1;            // become p_0, q_0 in the first step
  for (std::size_t j = 0; j < max_terms; ++j) {
    BigInt a = cur.floor_certified();
    if (j >= 1 && a < 1)
      throw PrecisionExhausted("expand: non-positive quotient past a_0");
    BigInt p_new = (j == 0) ? a : a * p + p_prev;
    BigInt q_new = (j == 0) ? BigInt(1) : a * q + q_prev;
    if (j == 0) {
      p_prev = 1;
      q_prev = 0;
    } else {
      p_prev = p;
      q_prev = q;
    }
    p = p_new;
    q = q_new;
    cf.quotients.push_back(a);
    cf.convergents.emplace_back(p, q);
    if (stop && stop(q, j)) return cf;
    Ball frac = cur - Ball::exact_int(a, cur.prec());
    if (frac.is_exact() && frac.mid().is_zero()) {
      cf.terminated_rational = true;
      return cf;
    }
    if (frac.lower().sign() <= 0)
      throw PrecisionExhausted("expand: fractional part not certifiably positive");
    cur = frac.recip();
  }
  throw PrecisionExhausted("expand: max_terms reached without stop firing");
}

Ball convergent_quality(const Ball& x, const CFExpansion& cf, std::size_t j) {
  if (cf.convergents.size() < j + 2)
    throw std::invalid_argument("convergent_quality: expansion has fewer than j+2 convergents");
  const auto& [pj, qj] = cf.convergents[j];
  const auto& qj1 = cf.convergents[j + 1].second;
  Ball approx = Ball::from_rational(pj, qj, x.prec());
  return (x - approx).abs_val() * Ball::exact_int(qj, x.prec()) * Ball::exact_int(qj1, x.prec());
}

Ball convergent_quality(const Ball& x, std::size_t j) {
  CFExpansion cf = expand(x, [j](const BigInt&, std::size_t jj) { return jj >= j + 1; });
  return convergent_quality(x, cf, j);
}

}  // namespace taxicab
