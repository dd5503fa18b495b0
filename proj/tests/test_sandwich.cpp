#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixture_table.hpp"
#include "ramnag/sandwich.hpp"

using namespace ramnag;

TEST_CASE("fixture polynomials are the exponential gaps") {
  const auto& fx = sandwich_fixtures();
  const auto& table = fixture_expectations();
  REQUIRE(fx.size() == table.size());
  for (std::size_t i = 0; i < fx.size(); ++i) {
    CAPTURE(fx[i].label);
    CHECK(fx[i].label == table[i].label);
    CHECK(fx[i].F.to_string() == table[i].F);
    CHECK(fx[i].F == exponential_gap_polynomial(fx[i].y, fx[i].z, fx[i].square_base));
  }
  CHECK(exponential_gap_polynomial(3, 4, false) == IntPolynomial{1, -6, 12, -8, 1});
}

TEST_CASE("fixture decompositions and thresholds") {
  for (const auto& e : fixture_expectations()) {
    CAPTURE(e.label);
    const auto& v = fixture_verdict(e.label).verdict;
    const auto& th = v.threshold;
    CHECK(th.G.to_string() == e.G);
    CHECK(th.R.to_string() == e.R);
    CHECK(v.F == th.G * th.G + th.R);
    CHECK((th.branch == SandwichBranch::NegativeLeadingR) == e.negative_branch);
    for (int j = 0; j < 3; ++j) CHECK(th.components[j] == e.m_recomputed[j]);
    long y0 = std::max({e.m_recomputed[0], e.m_recomputed[1], e.m_recomputed[2]});
    CHECK(th.Y0 == y0);
    CHECK(v.scanned_max == y0 - 1);
    CHECK(v.certified_no_solutions());
  }
}

TEST_CASE("threshold components recompute from scratch") {
  for (const auto& fx : sandwich_fixtures()) {
    CAPTURE(fx.label);
    auto d = truncated_square_root(fx.F);
    REQUIRE(d.integral);
    const IntPolynomial& G = *d.G;
    const IntPolynomial& R = *d.R;
    std::array<IntPolynomial, 3> parts;
    if (R.leading() > 0) {
      parts = {G, R, Integer(2) * G - R};
    } else {
      parts = {G, -R, Integer(2) * G + R - 1};
    }
    const auto& th = fixture_verdict(fx.label).verdict.threshold;
    for (int j = 0; j < 3; ++j) {
      Natural m = positivity_threshold(parts[j]);
      CHECK(th.components[j] == m);
      // Witness that m is tight and that positivity holds past it.
      if (m > 1) CHECK(parts[j](m - 1) <= 0);
      for (Integer t = m; t < m + 1000; ++t) REQUIRE(parts[j](t) >= 1);
    }
  }
}

TEST_CASE("published m(2G - R) = 1 is contradicted by direct evaluation") {
  // 2G - R for y3-z6 is 2t^3 - 12t^2 + 6t + 7, negative at t = 2.
  const auto& th = fixture_verdict("y3-z6").verdict.threshold;
  IntPolynomial P = Integer(2) * th.G - th.R;
  CHECK(P == IntPolynomial{7, 6, -12, 2});
  CHECK(P(Integer(2)) == -13);
  CHECK(P(Integer(5)) == -13);
  CHECK(th.components[2] == 6);
}

TEST_CASE("no fixture has a square value up to 10^4") {
  for (const auto& fx : sandwich_fixtures()) {
    CAPTURE(fx.label);
    for (long Y = 1; Y <= 10'000; ++Y) {
      Integer v = fx.F(Integer(Y));
      if (v <= 0) continue;
      REQUIRE_FALSE(is_perfect_square(v).has_value());
    }
  }
}

TEST_CASE("decide_no_solutions examples and errors") {
  auto v = decide_no_solutions(IntPolynomial{1, -6, 12, -8, 1});
  CHECK(v.threshold.Y0 == 16);
  CHECK(v.certified_no_solutions());

  // F(1) = 0 for the sq-y3-z5 fixture; X = 0 is not a solution.
  const auto& fx = sandwich_fixtures()[4];
  CHECK(fx.F(Integer(1)) == 0);
  CHECK(decide_no_solutions(fx.F).certified_no_solutions());

  CHECK_THROWS_AS(decide_no_solutions(IntPolynomial{1, 0, 2, 0, 1}), SandwichInapplicable);
  CHECK_THROWS_AS(decide_no_solutions(IntPolynomial{0, 1, 1}), SandwichInapplicable);
  CHECK_THROWS_AS(decide_no_solutions(IntPolynomial{0, 0, 0, 1}), SandwichInapplicable);
}

TEST_CASE("decide_no_solutions finds genuine solutions below the threshold") {
  // t^2 + 7 = X^2 has (X, Y) = (4, 3).
  auto v = decide_no_solutions(IntPolynomial{7, 0, 1});
  REQUIRE(v.solutions_found.size() == 1);
  CHECK(v.solutions_found[0] == SandwichSolution{Natural(4), Natural(3)});
}

TEST_CASE("decide_no_solutions is deterministic") {
  const auto& fx = sandwich_fixtures()[3];
  auto a = decide_no_solutions(fx.F);
  auto b = decide_no_solutions(fx.F);
  CHECK(a.threshold.Y0 == b.threshold.Y0);
  CHECK(a.threshold.components == b.threshold.components);
  CHECK(a.solutions_found == b.solutions_found);
  CHECK(&lemma23_suite() == &lemma23_suite());
  CHECK_THROWS(fixture_verdict("no-such-fixture"));
}
