#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramnag/bigarith.hpp"

namespace ramnag {

// a x^2 + b xy + c y^2
struct QuadForm {
  Integer a;
  Integer b;
  Integer c;

  Integer discriminant() const { return b * b - 4 * a * c; }
  bool primitive() const { return gcd(gcd(a, b), c) == 1; }

  auto operator<=>(const QuadForm& o) const {
    if (auto r = cmp(a, o.a); r != 0) return r <=> 0;
    if (auto r = cmp(b, o.b); r != 0) return r <=> 0;
    return cmp(c, o.c) <=> 0;
  }
  bool operator==(const QuadForm&) const = default;
};

std::string to_string(const QuadForm& f);

struct FormClassData {
  Natural discriminant;
  // Wide class number: rho-cycles identified under (a,b,c) -> (-a,b,-c).
  Natural h;
  // Proper-equivalence class number: the number of rho-cycles.
  Natural h_plus;
  std::vector<std::vector<QuadForm>> cycles;
};

// Throws std::invalid_argument unless disc > 0, disc = 0,1 (mod 4), nonsquare.
void validate_indefinite_discriminant(const Natural& disc);

// Reduced means |sqrt(disc) - 2|a|| < b < sqrt(disc), tested on integers.
bool is_reduced(const QuadForm& f, const Natural& disc);

// All primitive reduced forms, sorted lexicographically by (a, b, c).
// max_work caps the number of candidate (a, b) pairs examined.
std::vector<QuadForm> reduced_forms(const Natural& disc, std::uint64_t max_work = 200'000'000);

// Right neighbour of a reduced form: (c, r, (r^2 - disc) / 4c) with
// r = -b (mod 2c) and sqrt(disc) - 2|c| < r < sqrt(disc).
QuadForm rho(const QuadForm& f, const Natural& disc);

FormClassData class_number(const Natural& disc, std::uint64_t max_work = 200'000'000);

}  // namespace ramnag
