#include "ramnag/sandwich.hpp"

#include <future>

namespace ramnag {

std::string to_string(SandwichBranch b) {
  return b == SandwichBranch::PositiveLeadingR ? "positive-leading-R" : "negative-leading-R";
}

SandwichThreshold criterion_threshold(const IntPolynomial& F) {
  if (F.degree() < 2 || F.degree() % 2 != 0 || F.leading() != 1) {
    throw SandwichInapplicable("F must be monic of even degree >= 2");
  }
  SquareDecomposition dec = truncated_square_root(F);
  if (!dec.integral) throw SandwichInapplicable("truncated square root of F is not integral");
  if (dec.R->is_zero()) throw SandwichInapplicable("F is the square of a polynomial (R = 0)");

  SandwichThreshold th;
  th.G = *dec.G;
  th.R = *dec.R;
  const IntPolynomial twoG = Integer(2) * th.G;
  if (th.R.leading() > 0) {
    th.branch = SandwichBranch::PositiveLeadingR;
    th.components = {positivity_threshold(th.G), positivity_threshold(th.R),
                     positivity_threshold(twoG - th.R)};
  } else {
    th.branch = SandwichBranch::NegativeLeadingR;
    th.components = {positivity_threshold(th.G), positivity_threshold(-th.R),
                     positivity_threshold(twoG + th.R - 1)};
  }
  th.Y0 = std::max({th.components[0], th.components[1], th.components[2]});
  return th;
}

SandwichVerdict decide_no_solutions(const IntPolynomial& F) {
  SandwichVerdict v;
  v.F = F;
  v.threshold = criterion_threshold(F);
  if (v.threshold.Y0 > kMaxSandwichThreshold) {
    throw BudgetExceeded("sandwich threshold too large: Y0 = " + v.threshold.Y0.get_str());
  }
  v.scanned_max = v.threshold.Y0 - 1;
  for (Natural y = 1; y < v.threshold.Y0; ++y) {
    Integer value = F(y);
    if (value <= 0) continue;
    if (auto x = is_perfect_square(value)) v.solutions_found.push_back({*x, y});
  }
  return v;
}

IntPolynomial exponential_gap_polynomial(unsigned y, unsigned z, bool square_base) {
  IntPolynomial base = square_base ? IntPolynomial{-1, 0, 2} : IntPolynomial{-1, 2};
  IntPolynomial power{1};
  for (unsigned i = 0; i < y; ++i) power = power * base;
  return IntPolynomial::monomial(1, square_base ? 2 * z : z) - power;
}

const std::vector<SandwichFixture>& sandwich_fixtures() {
  static const std::vector<SandwichFixture> fixtures = [] {
    struct Row {
      const char* label;
      unsigned y, z;
      bool square_base;
    };
    constexpr Row rows[] = {
        {"y3-z4", 3, 4, false},    {"y3-z6", 3, 6, false},    {"y5-z6", 5, 6, false},
        {"y5-z8", 5, 8, false},    {"sq-y3-z5", 3, 5, true},  {"y5-z10", 5, 10, false},
        {"sq-y5-z7", 5, 7, true},  {"sq-y5-z9", 5, 9, true},
    };
    std::vector<SandwichFixture> out;
    for (const auto& r : rows) {
      out.push_back({r.label, r.y, r.z, r.square_base,
                     exponential_gap_polynomial(r.y, r.z, r.square_base)});
    }
    return out;
  }();
  return fixtures;
}

const std::vector<FixtureVerdict>& lemma23_suite() {
  static const std::vector<FixtureVerdict> suite = [] {
    const auto& fx = sandwich_fixtures();
    std::vector<std::future<SandwichVerdict>> jobs;
    for (const auto& f : fx) {
      jobs.push_back(std::async(std::launch::async, [&f] { return decide_no_solutions(f.F); }));
    }
    std::vector<FixtureVerdict> out;
    for (std::size_t i = 0; i < fx.size(); ++i) out.push_back({fx[i].label, jobs[i].get()});
    return out;
  }();
  return suite;
}

const FixtureVerdict& fixture_verdict(const std::string& label) {
  for (const auto& fv : lemma23_suite()) {
    if (fv.label == label) return fv;
  }
  throw std::out_of_range("unknown sandwich fixture " + label);
}

}  // namespace ramnag
