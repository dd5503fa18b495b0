#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramnag/pell.hpp"

namespace ramnag {

// A fundamental solution of X^2 - D Y^2 = K^Z: X1, Y1 >= 1 coprime with
// X1^2 - D Y1^2 = K^Z1 and
//   1 < |(X1 + Y1 sqrt D) / (X1 - Y1 sqrt D)| < U1 + V1 sqrt D.
// Every coprime solution is (X1 + lambda Y1 sqrt D)^t times a Pell solution.
struct FundamentalRep {
  Natural X1;
  Natural Y1;
  unsigned long Z1 = 0;
  Natural D;
  Integer K;

  bool operator==(const FundamentalRep&) const = default;
};

struct HeightBound {
  // |K|^Z1 * (U1 + V1 sqrt D); fundamental solutions have (X1 + Y1 sqrt D)^2 < beta.
  QuadInt beta;
  // Least integer n with n^2 >= beta, so X1 + Y1 sqrt D < ceiling.
  Natural ceiling;
};

HeightBound height_bound(const Natural& D, const Integer& K, unsigned long Z1,
                         const PellFundamental& pell);

// Exact check of the window inequality for X, Y >= 1 with X^2 - D Y^2 = N.
bool in_fundamental_window(const Natural& X, const Natural& Y, const Integer& N,
                           const PellFundamental& pell);

// Checks every FundamentalRep invariant except Z1 | h(4D), which is the
// caller's concern.
bool satisfies_invariants(const FundamentalRep& rep, const PellFundamental& pell);

// Scans Y1 = 1 .. floor(ceiling / floor(sqrt D)) + 1. Throws
// std::invalid_argument on bad (D, K, Z1) and BudgetExceeded when the scan is
// longer than max_scan.
std::vector<FundamentalRep> enumerate_fundamental(const Natural& D, const Integer& K,
                                                  unsigned long Z1, const PellFundamental& pell,
                                                  std::uint64_t max_scan = 50'000'000);

}  // namespace ramnag
