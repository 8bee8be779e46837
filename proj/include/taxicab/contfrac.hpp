#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "taxicab/ballreal.hpp"
#include "taxicab/bigint.hpp"

namespace taxicab {

// Partial quotients a_0; a_1, a_2, ... and convergents p_j/q_j of a real.
// q_j is strictly increasing for j >= 1 and
// p_j q_{j-1} - p_{j-1} q_j = (-1)^{j-1}.
struct CFExpansion {
  std::vector<BigInt> quotients;
  std::vector<std::pair<BigInt, BigInt>> convergents;  // (p_j, q_j)
  bool terminated_rational = false;

  std::size_t size() const { return quotients.size(); }
};

// Stops the expansion at the first convergent where it returns true.
using CFStop = std::function<bool(const BigInt& q_j, std::size_t j)>;

// Expands x until `stop` fires or the expansion terminates on an exact
// rational. Every quotient is certified: if the Gauss map produces a ball
// whose floor is ambiguous (or whose fractional part touches 0 without
// being the exact point 0), PrecisionExhausted is thrown and the caller
// retries at higher precision.
CFExpansion expand(const Ball& x, const CFStop& stop, std::size_t max_terms = 100000);

// Certified |x - p_j/q_j| * q_j * q_{j+1}; lies in (0,1) for irrational x.
Ball convergent_quality(const Ball& x, std::size_t j);
Ball convergent_quality(const Ball& x, const CFExpansion& cf, std::size_t j);

}  // namespace taxicab
