#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramnag/intpoly.hpp"

namespace ramnag {

// The square-sandwich criterion for X^2 = F(Y): with F = G^2 + R and
// deg R < deg G, no solution exists once Y passes a computable threshold Y0.
// Scanning 1 <= Y < Y0 turns it into a complete decision.

class SandwichInapplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SandwichBranch { PositiveLeadingR, NegativeLeadingR };

std::string to_string(SandwichBranch b);

struct SandwichThreshold {
  IntPolynomial G;
  IntPolynomial R;
  SandwichBranch branch = SandwichBranch::PositiveLeadingR;
  // Positive branch: m(G), m(R), m(2G - R).
  // Negative branch: m(G), m(-R), m(2G + R - 1).
  std::array<Natural, 3> components;
  Natural Y0;
};

struct SandwichSolution {
  Natural X;
  Natural Y;
  bool operator==(const SandwichSolution&) const = default;
};

struct SandwichVerdict {
  IntPolynomial F;
  SandwichThreshold threshold;
  Natural scanned_max;  // Y0 - 1
  std::vector<SandwichSolution> solutions_found;

  bool certified_no_solutions() const { return solutions_found.empty(); }
};

inline constexpr std::uint64_t kMaxSandwichThreshold = 10'000'000;

SandwichThreshold criterion_threshold(const IntPolynomial& F);

// Throws SandwichInapplicable (non-integral G, R = 0, bad shape) or
// BudgetExceeded (Y0 above kMaxSandwichThreshold).
SandwichVerdict decide_no_solutions(const IntPolynomial& F);

// F(t) = t^z - (2t - 1)^y, or with square_base: t^(2z) - (2t^2 - 1)^y.
// A solution of x^2 + (2k-1)^y = k^z is then X^2 = F(k) (or F(l) for k = l^2).
struct SandwichFixture {
  std::string label;  // "y3-z4", "sq-y5-z7", ...
  unsigned y = 0;
  unsigned z = 0;
  bool square_base = false;
  IntPolynomial F;
};

IntPolynomial exponential_gap_polynomial(unsigned y, unsigned z, bool square_base);

// The eight equations behind the even-z exclusion (y3-z4, y3-z6, y5-z6,
// y5-z8, y5-z10) and the square-k criterion (sq-y3-z5, sq-y5-z7, sq-y5-z9).
const std::vector<SandwichFixture>& sandwich_fixtures();

struct FixtureVerdict {
  std::string label;
  SandwichVerdict verdict;
};

// Decides all eight fixtures; computed once per process and shared.
const std::vector<FixtureVerdict>& lemma23_suite();

const FixtureVerdict& fixture_verdict(const std::string& label);

}  // namespace ramnag
