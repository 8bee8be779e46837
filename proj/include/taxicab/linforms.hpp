#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taxicab/ballreal.hpp"
#include "taxicab/bigint.hpp"

namespace taxicab {

// One row of a Matveev application: an algebraic number's logarithmic
// height and the majorant A_j used in the product. The majorant must
// dominate degree * height and 0.16.
struct HeightEntry {
  std::string label;
  Ball height;
  Ball a_value;
};

// Height/majorant rows for both linear forms of the cube problem, in a
// degree-2 field:
//   form 1: eta = alpha, F_m, 5*sqrt5   with A = log alpha, 2k log alpha, 3 log 5
//   form 2: eta = alpha, |beta|, sqrt5  with A = log alpha, log alpha, log 5
// The F_m majorant 2k log alpha is only valid while F_m <= alpha^k
// (the regime the collision equation forces); out of that regime this
// throws DomainError rather than fabricate an invalid instance.
std::vector<HeightEntry> height_table(std::uint64_t m_index, std::uint64_t k_index,
                                      std::size_t bits);

struct MatveevInstance {
  unsigned num_terms = 0;       // l: count of eta's
  unsigned degree = 1;          // d: field degree
  std::vector<Ball> a_values;   // the A_j majorants
  BigInt max_abs_b = 1;         // max |b_j| over the exponents
};

// C = 1.4 * 30^(l+3) * l^4.5 * d^2 * (1 + log d) * prod A_j.
// The full lower bound is log|Lambda| > -C * (1 + log max|b_j|).
Ball matveev_coefficient(const MatveevInstance& inst, std::size_t bits);
Ball matveev_log_lower_bound(const MatveevInstance& inst, std::size_t bits);

// A linear form Lambda = prod eta_j^{b_j} - 1 together with
// Gamma = log(1 + Lambda) = sum b_j log eta_j.
struct LinearFormValue {
  Ball lambda;
  Ball gamma;
  bool consistent() const;  // exp(gamma) - 1 and lambda must overlap
};

// Lambda_1 = alpha^{3k} F_m^{-3} (5 sqrt5)^{-1} - 1. Nonvanishing is
// asserted exactly: alpha^{3k} has positive rational part, so it cannot
// equal the pure sqrt5-multiple 5 sqrt5 F_m^3.
LinearFormValue eval_lambda1(std::uint64_t k, std::uint64_t m, std::size_t bits);

// Lambda_2 = alpha^{-3m} |beta|^k sqrt5 - 1. Nonvanishing: equality would
// force alpha^{3m+k} = sqrt5, impossible since L_{3m+k} >= 1.
LinearFormValue eval_lambda2(std::uint64_t k, std::uint64_t m, std::size_t bits);

struct FibBoundsReport {
  std::uint64_t n_max = 0;
  std::uint64_t upper_checked = 0;  // 0 <= n <= n_max
  std::uint64_t lower_checked = 0;  // 1 <= n <= n_max (fails at n = 0: F_0 = 0)
};

// Certifies alpha^(n-2) <= F_n <= alpha^(n-1); the lower bound starts at
// n = 1. Throws BoundViolation with the witness index on failure.
FibBoundsReport verify_fib_bounds(std::uint64_t n_max, std::size_t bits);

// The index restrictions of the cube collision problem:
// k >= l, m >= n, m > k, l-1 <= m, n-1 <= k, m < 3k.
bool constraint_filter(std::uint64_t k, std::uint64_t l, std::uint64_t m, std::uint64_t n);

// Reduction input: |u tau - v + mu| < A B^{-w} with 1 <= u <= M (= cap).
// In fixture mode the convergent denominator and epsilon are supplied
// directly instead of being derived from tau's continued fraction.
struct ReductionFixture {
  BigInt q;
  Ball epsilon;
};

struct ReductionInstance {
  Ball tau;
  Ball mu;
  Ball a_coeff;  // A > 0
  Ball b_base;   // B > 1
  BigInt cap;    // M >= 1
  std::optional<ReductionFixture> fixture;
  unsigned max_convergent_attempts = 30;
};

struct ReductionOutcome {
  BigInt q_used;
  Ball epsilon;
  BigInt bound;  // largest integer w with w <= log(A q / eps) / log B
};

// Dujella-Petho reduction. Live mode expands the continued fraction of
// tau until q_j > 6 cap and epsilon = ||mu q_j|| - cap ||tau q_j|| is
// certifiably positive, advancing to later convergents when it is not.
// Throws EpsilonNeverPositive after max_convergent_attempts convergents,
// and propagates PrecisionExhausted (callers escalate and retry).
ReductionOutcome dujella_petho_reduce(const ReductionInstance& inst);

// Certified upper bound for all real solutions of
//   x < coeff * (1 + log(scale * x))^power,   power in {0, 1, 2}.
// Returns the smallest integer the monotone fixed-point iteration can
// certify; bound + 1 certifiably violates the inequality.
BigInt solve_log_bound(const Ball& coeff, const Ball& scale, unsigned power, std::size_t bits);

// The assembled bound chain for the cube problem, per_k being the Matveev
// coefficient of the first form divided by k.
struct PipelineBounds {
  Ball c1_per_k;   // ~2.17e12, computed
  Ball c2;         // ~3.62e11, computed
  Ball m_coeff;    // computed, certified below the published 4.54e12
  Ball k_coeff;    // computed, certified below the published 7.55e11
  BigInt m_bound;  // ~1.54e28, from the published coefficients
  BigInt k_bound;  // k < 7.55e11 * (1 + log(3 m_bound))
};

PipelineBounds pipeline_bounds(std::uint64_t k_hint, std::size_t bits);

}  // namespace taxicab
