#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taxicab/contfrac.hpp"
#include "taxicab/errors.hpp"

using namespace taxicab;

namespace {

CFStop stop_at_q(long threshold) {
  return [threshold](const BigInt& q, std::size_t) { return q >= threshold; };
}

CFStop stop_at_count(std::size_t count) {
  return [count](const BigInt&, std::size_t j) { return j + 1 >= count; };
}

}  // namespace

TEST_CASE("golden ratio: all quotients 1, convergents are Fibonacci ratios") {
  CFExpansion cf = expand(constant(ConstantId::Alpha, 256), stop_at_q(8));
  REQUIRE(cf.size() == 6);
  for (const BigInt& a : cf.quotients) CHECK(a == 1);
  CHECK(cf.convergents.back().first == 13);
  CHECK(cf.convergents.back().second == 8);
  CHECK_FALSE(cf.terminated_rational);
}

TEST_CASE("sqrt5 expands as [2;4,4,4]") {
  CFExpansion cf = expand(constant(ConstantId::Sqrt5, 256), stop_at_count(4));
  REQUIRE(cf.size() == 4);
  CHECK(cf.quotients[0] == 2);
  CHECK(cf.quotients[1] == 4);
  CHECK(cf.quotients[2] == 4);
  CHECK(cf.quotients[3] == 4);
}

TEST_CASE("exact dyadic rationals terminate") {
  Ball x = Ball::exact(Dyadic(BigInt(9), -2), 128);  // 2.25
  CFExpansion cf = expand(x, nullptr);
  CHECK(cf.terminated_rational);
  REQUIRE(cf.size() == 2);
  CHECK(cf.quotients[0] == 2);
  CHECK(cf.quotients[1] == 4);
  CHECK(cf.convergents.back().first == 9);
  CHECK(cf.convergents.back().second == 4);
}

TEST_CASE("non-terminating rationals exhaust precision instead of guessing") {
  // 3/16 = [0;5,3]: the Gauss map needs 16/3, which no dyadic ball can
  // pin to a quotient; by design this is PrecisionExhausted, not a guess.
  Ball x = Ball::exact(Dyadic(BigInt(3), -4), 128);
  CHECK_THROWS_AS(expand(x, nullptr), PrecisionExhausted);
}

TEST_CASE("determinant identity and q monotonicity on long expansions") {
  for (ConstantId id : {ConstantId::Alpha, ConstantId::Sqrt5, ConstantId::LogAlpha}) {
    CFExpansion cf = expand(constant(id, 512), stop_at_count(60));
    REQUIRE(cf.size() == 60);
    for (std::size_t j = 1; j < cf.size(); ++j) {
      const auto& [pj, qj] = cf.convergents[j];
      const auto& [pp, qp] = cf.convergents[j - 1];
      BigInt det = pj * qp - pp * qj;
      CHECK(det == ((j - 1) % 2 == 0 ? 1 : -1));
      // (q_1, q_2, ...) is strictly increasing; q_1 = q_0 = 1 is possible
      if (j >= 2) CHECK(qj > qp);
      CHECK(cf.quotients[j] >= 1);
    }
  }
}

TEST_CASE("folding the quotients back reproduces the last convergent") {
  CFExpansion cf = expand(constant(ConstantId::LogAlpha, 512), stop_at_count(40));
  // fold from the tail: value = a_j + 1/rest as an exact fraction
  BigInt num = cf.quotients.back(), den = 1;
  for (std::size_t i = cf.size() - 1; i-- > 0;) {
    // next = a_i + den/num
    BigInt new_num = cf.quotients[i] * num + den;
    den = num;
    num = new_num;
  }
  CHECK(num == cf.convergents.back().first);
  CHECK(den == cf.convergents.back().second);
}

TEST_CASE("convergents approximate to within 1/(q_j q_{j+1}), certified") {
  Ball x = constant(ConstantId::Alpha, 512);
  CFExpansion cf = expand(x, stop_at_count(30));
  for (std::size_t j = 0; j + 1 < cf.size(); ++j) {
    const auto& [pj, qj] = cf.convergents[j];
    const auto& qj1 = cf.convergents[j + 1].second;
    Ball diff = (x - Ball::from_rational(pj, qj, 512)).abs_val();
    Ball bound = Ball::from_rational(BigInt(1), qj * qj1, 512);
    CHECK(diff.certainly_less(bound));
  }
}

TEST_CASE("convergent_quality lies in (0,1)") {
  Ball zero = Ball::exact(Dyadic(), 256);
  Ball one = Ball::exact(Dyadic(1), 256);
  for (auto [id, j] : {std::pair{ConstantId::Alpha, std::size_t(4)},
                       std::pair{ConstantId::Sqrt5, std::size_t(2)},
                       std::pair{ConstantId::Alpha, std::size_t(10)}}) {
    Ball q = convergent_quality(constant(id, 256), j);
    CHECK(zero.certainly_less(q));
    CHECK(q.certainly_less(one));
  }
}

TEST_CASE("quality needs j+2 convergents") {
  CFExpansion cf = expand(constant(ConstantId::Alpha, 256), stop_at_count(5));
  CHECK_THROWS_AS(convergent_quality(constant(ConstantId::Alpha, 256), cf, 4),
                  std::invalid_argument);
  CHECK_NOTHROW(convergent_quality(constant(ConstantId::Alpha, 256), cf, 3));
}

TEST_CASE("a ball too wide for its quotients exhausts precision") {
  // radius ~2^-20 cannot support 60 quotients of the golden ratio
  Ball coarse = Ball::from_interval(Dyadic(BigInt((1 << 20) + 1), -20),
                                    Dyadic(BigInt((1 << 20) + 3), -20), 64);
  CHECK_THROWS_AS(expand(coarse, stop_at_count(60)), PrecisionExhausted);
}
