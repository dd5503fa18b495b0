#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramnag/bigarith.hpp"

namespace ramnag {

// Dense polynomial over the integers; coeffs()[i] is the coefficient of t^i.
// Leading zeros are never stored, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  // Parses "c0,c1,...,cn" (constant term first).
  static IntPolynomial parse(std::string_view text);
  static IntPolynomial monomial(const Integer& c, unsigned degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  Integer leading() const { return is_zero() ? Integer(0) : coeffs_.back(); }

  Integer operator()(const Integer& t) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) = default;

  // "t^2 - 4*t - 2"
  std::string to_string() const;
  // "-2,-4,1"
  std::string to_csv() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

inline IntPolynomial operator-(const IntPolynomial& p, long c) {
  return p - IntPolynomial{c};
}

struct SquareDecomposition {
  bool integral = false;
  // Present only when integral.
  std::optional<IntPolynomial> G;
  std::optional<IntPolynomial> R;
};

// Unique monic G of degree n with deg(F - G^2) < n, for F monic of degree 2n.
SquareDecomposition truncated_square_root(const IntPolynomial& F);

// m(P): least m >= 1 such that P(t) >= 1 for every integer t >= m.
// Scans downward from the Cauchy root bound; throws BudgetExceeded when the
// bound exceeds max_scan.
Natural positivity_threshold(const IntPolynomial& P,
                             std::uint64_t max_scan = 100'000'000);

}  // namespace ramnag
