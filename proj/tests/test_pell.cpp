#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ramnag/pell.hpp"

using namespace ramnag;

namespace {

std::vector<long> as_longs(const std::vector<Natural>& v) {
  std::vector<long> out;
  for (auto& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST_CASE("continued fraction examples") {
  auto cf = sqrt_continued_fraction(Natural(2));
  CHECK(cf.a0 == 1);
  CHECK(as_longs(cf.period) == std::vector<long>{2});
  cf = sqrt_continued_fraction(Natural(3));
  CHECK(as_longs(cf.period) == std::vector<long>{1, 2});
  cf = sqrt_continued_fraction(Natural(736));
  CHECK(cf.a0 == 27);
  CHECK(as_longs(cf.period) == std::vector<long>{7, 1, 2, 1, 2, 1, 7, 54});
  CHECK_THROWS_AS(sqrt_continued_fraction(Natural(4)), std::invalid_argument);
  CHECK_THROWS_AS(sqrt_continued_fraction(Natural(1)), std::invalid_argument);
  CHECK_THROWS_AS(sqrt_continued_fraction(Natural(94), 3), BudgetExceeded);
}

TEST_CASE("continued fraction invariants") {
  for (long D = 2; D <= 2000; ++D) {
    if (oracle::is_square_ll(D)) continue;
    auto cf = sqrt_continued_fraction(Natural(D));
    REQUIRE(!cf.period.empty());
    REQUIRE(cf.period.back() == 2 * cf.a0);
    for (auto& q : cf.period) REQUIRE(q > 0);
    // The period minus its last term is a palindrome.
    for (std::size_t i = 0, j = cf.period.size() - 2; i + 1 < cf.period.size() && i < j; ++i, --j)
      REQUIRE(cf.period[i] == cf.period[j]);
  }
}

TEST_CASE("least solution examples") {
  auto p = least_solution(Natural(2));
  CHECK(p.U1 == 3);
  CHECK(p.V1 == 2);
  p = least_solution(Natural(5));
  CHECK(p.U1 == 9);
  CHECK(p.V1 == 4);
  p = least_solution(Natural(736));
  CHECK(p.U1 == 24335);
  CHECK(p.V1 == 897);
  p = least_solution(Natural(61));
  CHECK(p.U1 == Natural("1766319049"));
  CHECK(p.V1 == Natural("226153980"));
  CHECK_THROWS_AS(least_solution(Natural(49)), std::invalid_argument);
}

TEST_CASE("least solution is a minimal Pell solution for D <= 500") {
  for (long D = 2; D <= 500; ++D) {
    if (oracle::is_square_ll(D)) continue;
    CAPTURE(D);
    auto p = least_solution(Natural(D));
    REQUIRE(p.U1 * p.U1 - D * p.V1 * p.V1 == 1);
    if (p.V1 <= 100'000) {
      REQUIRE(oracle::least_pell_v(D, p.V1.get_si()) == p.V1.get_si());
    } else {
      REQUIRE(oracle::least_pell_v(D, 100'000) == 0);
    }
  }
}

TEST_CASE("powers of the least unit have V divisible by V1") {
  for (long D : {2L, 3L, 7L, 13L, 61L, 736L, 991L}) {
    auto p = least_solution(Natural(D));
    for (unsigned long n = 1; n <= 5; ++n) {
      QuadInt u = quad_pow(p.unit(), n);
      REQUIRE(u.norm() == 1);
      REQUIRE(mod(u.b, p.V1) == 0);
    }
  }
}

TEST_CASE("quadratic integer arithmetic") {
  QuadInt a{1, 1, 2};
  CHECK(quad_pow(a, 2) == QuadInt{3, 2, 2});
  CHECK(QuadInt{3, 2, 2} * QuadInt{3, -2, 2} == QuadInt{1, 0, 2});
  QuadInt w{2577, 95, 736};
  CHECK(quad_pow(w, 3).b == Integer("2523692765"));
  CHECK(quad_pow(w, 3).a == Integer("68466068433"));
  CHECK(quad_pow(w, 0) == QuadInt{1, 0, 736});
  CHECK_THROWS(QuadInt{1, 1, 2} * QuadInt{1, 1, 3});
  CHECK(to_string(QuadInt{3, -2, 2}) == "3 - 2*sqrt(2)");
}

TEST_CASE("norm is multiplicative") {
  for (int i = 0; i < 2000; ++i) {
    Natural D = oracle::uniform(2, 1000);
    QuadInt x{oracle::uniform(-10000, 10000), oracle::uniform(-10000, 10000), D};
    QuadInt y{oracle::uniform(-10000, 10000), oracle::uniform(-10000, 10000), D};
    REQUIRE((x * y).norm() == x.norm() * y.norm());
    REQUIRE(quad_mul(x, y) == x * y);
  }
}

TEST_CASE("exact sign and comparison") {
  CHECK(quad_sign(Integer(0), Integer(0), Natural(5)) == 0);
  CHECK(quad_sign(Integer(3), Integer(-2), Natural(2)) == 1);   // 3 - 2.828
  CHECK(quad_sign(Integer(-3), Integer(2), Natural(2)) == -1);
  CHECK(quad_sign(Integer(-3), Integer(2), Natural(3)) == 1);   // 3.464 - 3
  CHECK(quad_sign(Integer(-4), Integer(2), Natural(4)) == 0);
  // 8462^2 against 1471 * (24335 + 897 sqrt 736): just above.
  Integer a = Integer(8462) * 8462 - Integer(1471) * 24335;
  Integer b = -Integer(1471) * 897;
  CHECK(quad_sign(a, b, Natural(736)) == 1);
  CHECK(quad_sign(a - (2 * 8462 - 1), b, Natural(736)) == -1);
  for (int i = 0; i < 5000; ++i) {
    long D = oracle::uniform(2, 200);
    long x = oracle::uniform(-1000, 1000), y = oracle::uniform(-1000, 1000);
    long double v = x + y * std::sqrt(static_cast<long double>(D));
    if (std::fabs(v) < 1e-6) continue;
    REQUIRE(quad_sign(Integer(x), Integer(y), Natural(D)) == (v > 0 ? 1 : -1));
  }
  CHECK(compare(QuadInt{3, 2, 2}, QuadInt{5, 0, 2}) == 1);
  CHECK(compare(QuadInt{3, 2, 2}, QuadInt{3, 2, 2}) == 0);
  CHECK(QuadInt{3, -2, 2}.sign() == 1);
}
