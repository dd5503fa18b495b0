#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ramnag/intpoly.hpp"

using namespace ramnag;

namespace {

IntPolynomial random_poly(int max_degree, long bound) {
  std::vector<Integer> c;
  int deg = static_cast<int>(oracle::uniform(0, max_degree));
  for (int i = 0; i <= deg; ++i) c.emplace_back(oracle::uniform(-bound, bound));
  return IntPolynomial(std::move(c));
}

// m(P) by upward scan, valid when every real root lies below limit.
long brute_threshold(const IntPolynomial& P, long limit) {
  long last_bad = 0;
  for (long t = 1; t <= limit; ++t)
    if (P(Integer(t)) <= 0) last_bad = t;
  return last_bad + 1;
}

}  // namespace

TEST_CASE("evaluation examples") {
  IntPolynomial F{1, -6, 12, -8, 1};
  CHECK(F(Integer(1)) == 0);
  CHECK(IntPolynomial{0, 0, 1}(Integer(-3)) == 9);
  CHECK(IntPolynomial{-8, -30, 2}(Integer(16)) == 24);
}

TEST_CASE("normalization and formatting") {
  IntPolynomial p({Integer(3), Integer(0), Integer(0), Integer(0)});
  CHECK(p.degree() == 0);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{-2, -4, 1}.to_string() == "t^2 - 4*t - 2");
  CHECK(IntPolynomial{-3, -22}.to_string() == "-22*t - 3");
  CHECK(IntPolynomial{-2, -4, 1}.to_csv() == "-2,-4,1");
  CHECK(IntPolynomial::parse("1, -6,12,-8,1") == IntPolynomial{1, -6, 12, -8, 1});
  CHECK_THROWS_AS(IntPolynomial::parse("1,x"), std::invalid_argument);
  CHECK(IntPolynomial::monomial(Integer(5), 3) == IntPolynomial{0, 0, 0, 5});
}

TEST_CASE("evaluation is a ring homomorphism") {
  for (int i = 0; i < 500; ++i) {
    IntPolynomial P = random_poly(6, 50), Q = random_poly(6, 50);
    Integer t = oracle::uniform(-100, 100);
    REQUIRE((P + Q)(t) == P(t) + Q(t));
    REQUIRE((P - Q)(t) == P(t) - Q(t));
    REQUIRE((P * Q)(t) == P(t) * Q(t));
    REQUIRE((Integer(7) * P)(t) == 7 * P(t));
  }
}

TEST_CASE("truncated square root examples") {
  auto d = truncated_square_root(IntPolynomial{1, -6, 12, -8, 1});
  REQUIRE(d.integral);
  CHECK(*d.G == IntPolynomial{-2, -4, 1});
  CHECK(*d.R == IntPolynomial{-3, -22});

  d = truncated_square_root(IntPolynomial{1, 0, -6, 0, 12, 0, -8, 0, 0, 0, 1});
  REQUIRE(d.integral);
  CHECK(*d.G == IntPolynomial{0, -4, 0, 0, 0, 1});
  CHECK(*d.R == IntPolynomial{1, 0, -22, 0, 12});

  d = truncated_square_root(IntPolynomial{1, 0, 2, 0, 1});
  REQUIRE(d.integral);
  CHECK(*d.G == IntPolynomial{1, 0, 1});
  CHECK(d.R->is_zero());

  // t^2 + t: G would be t + 1/2.
  CHECK_FALSE(truncated_square_root(IntPolynomial{0, 1, 1}).integral);
  CHECK_THROWS_AS(truncated_square_root(IntPolynomial{0, 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(truncated_square_root(IntPolynomial{0, 0, 2}), std::invalid_argument);
}

TEST_CASE("truncated square root identity on random squares plus tails") {
  for (int i = 0; i < 300; ++i) {
    int n = static_cast<int>(oracle::uniform(1, 6));
    std::vector<Integer> g;
    for (int j = 0; j < n; ++j) g.emplace_back(oracle::uniform(-30, 30));
    g.emplace_back(1);
    IntPolynomial G(g);
    IntPolynomial R = random_poly(n - 1, 100);
    auto d = truncated_square_root(G * G + R);
    REQUIRE(d.integral);
    REQUIRE(*d.G == G);
    REQUIRE(*d.R == R);
  }
}

TEST_CASE("positivity threshold examples") {
  CHECK(positivity_threshold(IntPolynomial{-2, -4, 1}) == 5);
  CHECK(positivity_threshold(IntPolynomial{-8, -30, 2}) == 16);
  CHECK(positivity_threshold(IntPolynomial{-5, 1}) == 6);
  CHECK(positivity_threshold(IntPolynomial{1, 0, 1}) == 1);
  CHECK(positivity_threshold(IntPolynomial{3}) == 1);
  CHECK_THROWS_AS(positivity_threshold(IntPolynomial{1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(positivity_threshold(IntPolynomial{}), std::invalid_argument);
  CHECK_THROWS_AS(positivity_threshold(IntPolynomial{-1000000, 1}, 1000), BudgetExceeded);
}

TEST_CASE("positivity threshold agrees with an upward scan") {
  for (int i = 0; i < 400; ++i) {
    IntPolynomial P = random_poly(5, 40);
    if (P.is_zero() || P.leading() <= 0) P = P + IntPolynomial::monomial(Integer(1), P.degree() + 1);
    long m = positivity_threshold(P).get_si();
    REQUIRE(m == brute_threshold(P, 200));
    if (m > 1) REQUIRE(P(Integer(m - 1)) <= 0);
    for (long t = m; t <= m + 1000; ++t) REQUIRE(P(Integer(t)) >= 1);
  }
}
