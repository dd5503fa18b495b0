#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramnag/bigarith.hpp"

namespace ramnag {

// a + b*sqrt(D). D travels with the value; mixing different D throws.
struct QuadInt {
  Integer a;
  Integer b;
  Natural D;

  QuadInt conj() const { return {a, -b, D}; }
  Integer norm() const { return a * a - D * b * b; }
  // Sign of a + b*sqrt(D) as a real number, decided exactly.
  int sign() const;

  bool operator==(const QuadInt&) const = default;
};

QuadInt operator*(const QuadInt& x, const QuadInt& y);
QuadInt operator+(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x, const QuadInt& y);
QuadInt quad_mul(const QuadInt& x, const QuadInt& y);
QuadInt quad_pow(const QuadInt& x, unsigned long n);

// Exact three-way comparison of x and y as real numbers (same D).
int compare(const QuadInt& x, const QuadInt& y);

// Sign of a + b*sqrt(D) for D >= 0.
int quad_sign(const Integer& a, const Integer& b, const Natural& D);

std::string to_string(const QuadInt& x);

struct SqrtContinuedFraction {
  Natural a0;
  std::vector<Natural> period;
};

// Throws std::invalid_argument for D < 2 or square D, BudgetExceeded when the
// period is longer than max_period.
SqrtContinuedFraction sqrt_continued_fraction(const Natural& D,
                                              std::size_t max_period = 10'000'000);

struct PellFundamental {
  Natural U1;
  Natural V1;
  Natural D;
  std::vector<Natural> cf_period;

  QuadInt unit() const { return {U1, V1, D}; }
};

// Least positive solution of U^2 - D V^2 = 1.
PellFundamental least_solution(const Natural& D, std::size_t max_period = 10'000'000);

}  // namespace ramnag
