#pragma once

#include <array>
#include <string>
#include <vector>

// Expected data for the eight built-in sandwich fixtures.
// m_recomputed comes from brute-force evaluation; m_published is the triple
// as printed in the published proof, which disagrees in four places.
struct FixtureExpectation {
  std::string label;
  std::string F, G, R;
  bool negative_branch;
  std::array<long, 3> m_recomputed;
  std::array<long, 3> m_published;
};

inline const std::vector<FixtureExpectation>& fixture_expectations() {
  static const std::vector<FixtureExpectation> table = {
      {"y3-z4", "t^4 - 8*t^3 + 12*t^2 - 6*t + 1", "t^2 - 4*t - 2", "-22*t - 3", true, {5, 1, 16}, {5, 1, 16}},
      {"y3-z6", "t^6 - 8*t^3 + 12*t^2 - 6*t + 1", "t^3 - 4", "12*t^2 - 6*t - 15", false, {2, 2, 6}, {2, 2, 1}},
      {"y5-z6", "t^6 - 32*t^5 + 80*t^4 - 80*t^3 + 40*t^2 - 10*t + 1", "t^3 - 16*t^2 - 88*t - 1448",
       "-54040*t^2 - 254858*t - 2096703", true, {23, 1, 27041}, {23, 1, 27041}},
      {"y5-z8", "t^8 - 32*t^5 + 80*t^4 - 80*t^3 + 40*t^2 - 10*t + 1", "t^4 - 16*t + 40",
       "-80*t^3 - 216*t^2 + 1270*t - 1599", true, {1, 1, 43}, {1, 1, 43}},
      {"sq-y3-z5", "t^10 - 8*t^6 + 12*t^4 - 6*t^2 + 1", "t^5 - 4*t", "12*t^4 - 22*t^2 + 1", false, {2, 2, 6},
       {2, 2, 1}},
      {"y5-z10", "t^10 - 32*t^5 + 80*t^4 - 80*t^3 + 40*t^2 - 10*t + 1", "t^5 - 16",
       "80*t^4 - 80*t^3 + 40*t^2 - 10*t - 255", false, {2, 2, 39}, {2, 2, 1}},
      {"sq-y5-z7", "t^14 - 32*t^10 + 80*t^8 - 80*t^6 + 40*t^4 - 10*t^2 + 1", "t^7 - 16*t^3 + 40*t",
       "-336*t^6 + 1320*t^4 - 1610*t^2 + 1", true, {1, 1, 168}, {1, 1, 168}},
      {"sq-y5-z9", "t^18 - 32*t^10 + 80*t^8 - 80*t^6 + 40*t^4 - 10*t^2 + 1", "t^9 - 16*t",
       "80*t^8 - 80*t^6 + 40*t^4 - 266*t^2 + 1", false, {2, 2, 40}, {2, 2, 1}},
  };
  return table;
}
