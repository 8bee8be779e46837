#include "taxicab/linforms.hpp"

#include <stdexcept>

#include "taxicab/contfrac.hpp"
#include "taxicab/recurrence.hpp"

namespace taxicab {

namespace {

Ball one(std::size_t prec) { return Ball::exact(Dyadic(1), prec); }

// Certified F_m <= alpha^k; the two sides are never equal (alpha^k is
// irrational for k >= 1), so escalation always terminates.
bool fib_below_alpha_pow(const BigInt& fm, std::uint64_t k, std::size_t bits) {
  return with_precision_escalation(bits, [&](std::size_t b) {
    Ball pw = constant(ConstantId::Alpha, b).pow(static_cast<std::int64_t>(k));
    Dyadic f = Dyadic::from_integer(fm);
    if (f <= pw.lower()) return true;
    if (pw.upper() < f) return false;
    throw PrecisionExhausted("fib_below_alpha_pow: overlap");
  });
}

}  // namespace

std::vector<HeightEntry> height_table(std::uint64_t m_index, std::uint64_t k_index,
                                      std::size_t bits) {
  if (m_index < 1 || k_index < 1)
    throw std::invalid_argument("height_table: indices must be >= 1");
  std::size_t p = bits + 16;
  Ball log_alpha = constant(ConstantId::LogAlpha, p);
  Ball log5 = constant(ConstantId::Log5, p);
  BigInt fm = seq_value(SequenceKind::Fibonacci, m_index);
  if (!fib_below_alpha_pow(fm, k_index, p))
    throw DomainError("height_table: F_m > alpha^k, majorant 2k log alpha is invalid here");

  Ball log_fm = Ball::exact_int(fm, p).log_val();
  std::vector<HeightEntry> rows;
  rows.push_back({"alpha", log_alpha.mul_pow2(-1), log_alpha});
  rows.push_back({"F_m", log_fm,
                  Ball::exact_int(BigInt(2 * static_cast<long>(k_index)), p) * log_alpha});
  rows.push_back({"5*sqrt5", (log5 * Ball::exact(Dyadic(3), p)).mul_pow2(-1),
                  log5 * Ball::exact(Dyadic(3), p)});
  rows.push_back({"alpha", log_alpha.mul_pow2(-1), log_alpha});
  rows.push_back({"|beta|", log_alpha.mul_pow2(-1), log_alpha});
  rows.push_back({"sqrt5", log5.mul_pow2(-1), log5});

  // Every majorant must clear 0.16 = 4/25 (certified; the smallest here is
  // log alpha ~ 0.481).
  Ball floor016 = Ball::from_rational(BigInt(4), BigInt(25), p);
  for (const auto& r : rows) {
    if (!(floor016.certainly_less(r.a_value)))
      throw DomainError("height_table: majorant does not clear 0.16 for " + r.label);
  }
  return rows;
}

Ball matveev_coefficient(const MatveevInstance& inst, std::size_t bits) {
  if (inst.num_terms < 1 || inst.degree < 1)
    throw std::invalid_argument("matveev_coefficient: l >= 1 and d >= 1 required");
  if (inst.a_values.size() != inst.num_terms)
    throw std::invalid_argument("matveev_coefficient: need exactly l majorants");
  if (inst.max_abs_b < 1)
    throw std::invalid_argument("matveev_coefficient: max|b_j| >= 1 required");
  std::size_t p = bits + 16;
  BigInt l(static_cast<long>(inst.num_terms));
  BigInt d(static_cast<long>(inst.degree));
  Ball c = Ball::from_rational(BigInt(7), BigInt(5), p);           // 1.4
  c = c * Ball::exact_int(pow_int(BigInt(30), inst.num_terms + 3), p);
  c = c * Ball::exact_int(l, p).pow(4) * Ball::exact_int(l, p).sqrt_val();  // l^4.5
  c = c * Ball::exact_int(d, p).pow(2);
  c = c * (one(p) + Ball::exact_int(d, p).log_val());
  for (const auto& a : inst.a_values) c = c * a;
  return c.with_prec(bits);
}

Ball matveev_log_lower_bound(const MatveevInstance& inst, std::size_t bits) {
  std::size_t p = bits + 16;
  Ball c = matveev_coefficient(inst, p);
  Ball logb = Ball::exact_int(inst.max_abs_b, p).log_val();
  return (-(c * (one(p) + logb))).with_prec(bits);
}

bool LinearFormValue::consistent() const {
  Ball reconstructed = gamma.exp_val() - Ball::exact(Dyadic(1), gamma.prec());
  return reconstructed.overlaps(lambda);
}

LinearFormValue eval_lambda1(std::uint64_t k, std::uint64_t m, std::size_t bits) {
  if (k < 1 || m < 1) throw std::invalid_argument("eval_lambda1: k, m >= 1 required");
  std::size_t p = bits + 32;
  // Nonvanishing, exactly: alpha^{3k} = (L_{3k} + F_{3k} sqrt5)/2 has
  // positive rational part, while 5 sqrt5 F_m^3 has none.
  QuadExact a3k = quad_power(QuadExact::alpha(), 3 * k);
  if (a3k.twice_rational_part() <= 0)
    throw IdentityViolation("eval_lambda1: alpha^{3k} lost positivity");
  QuadExact a6k = a3k * a3k;
  if (a6k.twice_sqrt5_coeff() == 0)
    throw IdentityViolation("eval_lambda1: alpha^{6k} became rational");

  BigInt fm = seq_value(SequenceKind::Fibonacci, m);
  BigInt fm3 = fm * fm * fm;
  Ball alpha = constant(ConstantId::Alpha, p);
  Ball sqrt5 = constant(ConstantId::Sqrt5, p);
  Ball lambda = alpha.pow(static_cast<std::int64_t>(3 * k)) /
                    Ball::exact_int(fm3, p) /
                    (Ball::exact(Dyadic(5), p) * sqrt5) -
                one(p);
  Ball gamma = Ball::exact_int(BigInt(3 * static_cast<long>(k)), p) *
                   constant(ConstantId::LogAlpha, p) -
               Ball::exact(Dyadic(3), p) * Ball::exact_int(fm, p).log_val() -
               constant(ConstantId::Log5Sqrt5, p);
  return {lambda.with_prec(bits), gamma.with_prec(bits)};
}

LinearFormValue eval_lambda2(std::uint64_t k, std::uint64_t m, std::size_t bits) {
  if (k < 1 || m < 1) throw std::invalid_argument("eval_lambda2: k, m >= 1 required");
  std::size_t p = bits + 32;
  // Nonvanishing: alpha^{-3m} |beta|^k = 1/sqrt5 would force
  // alpha^{3m+k} = sqrt5, i.e. L_{3m+k} = 0. Lucas numbers never vanish.
  QuadExact apow = quad_power(QuadExact::alpha(), 3 * m + k);
  if (apow.twice_rational_part() <= 0)
    throw IdentityViolation("eval_lambda2: alpha^{3m+k} lost positivity");

  Ball alpha = constant(ConstantId::Alpha, p);
  Ball abs_beta = constant(ConstantId::AbsBeta, p);
  Ball sqrt5 = constant(ConstantId::Sqrt5, p);
  Ball lambda = abs_beta.pow(static_cast<std::int64_t>(k)) *
                    alpha.pow(static_cast<std::int64_t>(3 * m)).recip() * sqrt5 -
                one(p);
  Ball gamma = Ball::exact_int(BigInt(static_cast<long>(k)), p) *
                   constant(ConstantId::LogAbsBeta, p) -
               Ball::exact_int(BigInt(3 * static_cast<long>(m)), p) *
                   constant(ConstantId::LogAlpha, p) +
               constant(ConstantId::Log5, p).mul_pow2(-1);
  return {lambda.with_prec(bits), gamma.with_prec(bits)};
}

FibBoundsReport verify_fib_bounds(std::uint64_t n_max, std::size_t bits) {
  std::size_t p = bits + 16;
  Ball alpha = constant(ConstantId::Alpha, p);
  SequenceRange fib(SequenceKind::Fibonacci, 0);
  FibBoundsReport report{n_max, 0, 0};
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    BigInt fn = fib.next();
    Dyadic f = Dyadic::from_integer(fn);
    Ball up = alpha.pow(static_cast<std::int64_t>(n) - 1);
    if (!(f <= up.lower()))
      throw BoundViolation("verify_fib_bounds: F_n <= alpha^(n-1) not certified", n);
    report.upper_checked = n;
    if (n >= 1) {
      Ball low = alpha.pow(static_cast<std::int64_t>(n) - 2);
      if (!(low.upper() <= f))
        throw BoundViolation("verify_fib_bounds: alpha^(n-2) <= F_n not certified", n);
      report.lower_checked = n;
    }
  }
  return report;
}

bool constraint_filter(std::uint64_t k, std::uint64_t l, std::uint64_t m, std::uint64_t n) {
  return k >= l && m >= n && m > k && l <= m + 1 && n <= k + 1 && m < 3 * k;
}

namespace {

ReductionOutcome finish_reduction(const ReductionInstance& inst, const BigInt& q,
                                  const Ball& eps) {
  if (!(q > 6 * inst.cap))
    throw DomainError("dujella_petho_reduce: convergent denominator must exceed 6M");
  if (!eps.certainly_positive())
    throw DomainError("dujella_petho_reduce: epsilon not certifiably positive");
  std::size_t p = std::max<std::size_t>(inst.a_coeff.prec(), 64) + 32;
  Ball ratio = (inst.a_coeff * Ball::exact_int(q, p) / eps).log_val() /
               inst.b_base.log_val();
  return {q, eps, ratio.floor_certified()};
}

}  // namespace

ReductionOutcome dujella_petho_reduce(const ReductionInstance& inst) {
  if (!inst.a_coeff.certainly_positive())
    throw std::invalid_argument("dujella_petho_reduce: A must be > 0");
  if (!Ball::exact(Dyadic(1), inst.b_base.prec()).certainly_less(inst.b_base))
    throw std::invalid_argument("dujella_petho_reduce: B must be > 1");
  if (inst.cap < 1) throw std::invalid_argument("dujella_petho_reduce: M >= 1 required");

  if (inst.fixture) return finish_reduction(inst, inst.fixture->q, inst.fixture->epsilon);

  BigInt six_cap = 6 * inst.cap;
  // Expand far enough to have max_convergent_attempts candidates past 6M.
  std::size_t seen_past = 0;
  CFExpansion cf = expand(inst.tau, [&](const BigInt& q, std::size_t) {
    if (q > six_cap) ++seen_past;
    return seen_past >= inst.max_convergent_attempts;
  });
  unsigned attempts = 0;
  for (const auto& [pj, qj] : cf.convergents) {
    if (!(qj > six_cap)) continue;
    ++attempts;
    Ball tq = (inst.tau * Ball::exact_int(qj, inst.tau.prec())).nearest_int_distance();
    Ball mq = (inst.mu * Ball::exact_int(qj, inst.mu.prec())).nearest_int_distance();
    Ball eps = mq - Ball::exact_int(inst.cap, inst.tau.prec()) * tq;
    if (eps.certainly_positive()) return finish_reduction(inst, qj, eps);
    if (eps.upper().sign() > 0)
      throw PrecisionExhausted("dujella_petho_reduce: epsilon sign not certified");
    // certified eps <= 0: try the next convergent
  }
  throw EpsilonNeverPositive("dujella_petho_reduce: no convergent gave positive epsilon after " +
                             std::to_string(attempts) + " attempts");
}

BigInt solve_log_bound(const Ball& coeff, const Ball& scale, unsigned power, std::size_t bits) {
  if (power > 2) throw std::invalid_argument("solve_log_bound: power in {0, 1, 2}");
  if (!coeff.certainly_positive() || !scale.certainly_positive())
    throw std::invalid_argument("solve_log_bound: coeff and scale must be > 0");
  std::size_t p = bits + 16;
  Ball c = coeff.with_prec(p);
  Ball s = scale.with_prec(p);
  auto f = [&](const BigInt& x) {
    Ball base = one(p) + (s * Ball::exact_int(x, p)).log_val();
    return c * base.pow(static_cast<std::int64_t>(power));
  };
  auto ceil_up = [](const Ball& b) { return b.upper().ceil(); };

  // Start at or above the crossing region; keep scale*x >= 3 so the
  // right-hand side is increasing and f(x)/x is decreasing.
  BigInt x = std::max<BigInt>(BigInt(1), ceil_up(c));
  x = std::max<BigInt>(x, ceil_up(Ball::exact(Dyadic(3), p) / s));
  unsigned steps = 0;
  // Ascend until f(x) <= x is certified.
  for (;;) {
    if (++steps > 1000) throw NonConvergent("solve_log_bound: ascent exceeded 1000 steps");
    Ball fx = f(x);
    if (fx.upper() <= Dyadic::from_integer(x)) break;
    x = 2 * std::max<BigInt>(x, ceil_up(fx));
  }
  // Descend along the fixed-point iteration.
  for (;;) {
    if (++steps > 2000) throw NonConvergent("solve_log_bound: descent exceeded step budget");
    BigInt x2 = ceil_up(f(x));
    if (x2 < x)
      x = x2;
    else
      break;
  }
  // Final unit polish: f(t) <= t certifies t is at or above the crossing.
  for (;;) {
    if (++steps > 4000) throw NonConvergent("solve_log_bound: polish exceeded step budget");
    BigInt x1 = x - 1;
    if (x1 < 1) break;
    if (f(x1).upper() <= Dyadic::from_integer(x1))
      x = x1;
    else
      break;
  }
  // bound + 1 must certifiably violate x < f(x).
  if (!(f(x + 1).upper() < Dyadic::from_integer(x + 1)))
    throw PrecisionExhausted("solve_log_bound: could not certify the bound; raise --bits");
  return x;
}

PipelineBounds pipeline_bounds(std::uint64_t k_hint, std::size_t bits) {
  if (k_hint < 1) throw std::invalid_argument("pipeline_bounds: k_hint >= 1");
  std::size_t p = bits + 16;
  Ball log_alpha = constant(ConstantId::LogAlpha, p);
  Ball log5 = constant(ConstantId::Log5, p);

  MatveevInstance first{3, 2,
                        {log_alpha,
                         Ball::exact_int(BigInt(2 * static_cast<long>(k_hint)), p) * log_alpha,
                         Ball::exact(Dyadic(3), p) * log5},
                        BigInt(1)};
  MatveevInstance second{3, 2, {log_alpha, log_alpha, log5}, BigInt(1)};
  Ball c1 = matveev_coefficient(first, p) / Ball::exact_int(BigInt(static_cast<long>(k_hint)), p);
  Ball c2 = matveev_coefficient(second, p);

  // Dividing by log alpha absorbs the additive log 9 / log 18 terms for
  // m >= 7; the published constants round the quotients up.
  Ball m_coeff = c1 / log_alpha;
  Ball k_coeff = c2 / log_alpha;
  Ball m_published = Ball::from_decimal("4.54e12", p);
  Ball k_published = Ball::from_decimal("7.55e11", p);
  if (Ball::cmp_certified(m_coeff, m_published) != Order::Less)
    throw Error("pipeline_bounds: computed m-coefficient not below the published 4.54e12");
  if (Ball::cmp_certified(k_coeff, k_published) != Order::Less)
    throw Error("pipeline_bounds: computed k-coefficient not below the published 7.55e11");

  // The combined stage composes the published (rounded-up, hence still
  // valid) coefficients: m < 4.54e12 * 7.55e11 * (1 + log(3m))^2.
  BigInt m_bound =
      solve_log_bound(m_published * k_published, Ball::exact(Dyadic(3), p), 2, bits);
  Ball k_ball = k_published *
                (one(p) + (Ball::exact(Dyadic(3), p) * Ball::exact_int(m_bound, p)).log_val());
  BigInt k_bound = k_ball.upper().floor();
  return {c1.with_prec(bits), c2.with_prec(bits), m_coeff.with_prec(bits),
          k_coeff.with_prec(bits), m_bound, k_bound};
}

}  // namespace taxicab
