#include "ramnag/qforms.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ramnag {

std::string to_string(const QuadForm& f) {
  return "(" + f.a.get_str() + "," + f.b.get_str() + "," + f.c.get_str() + ")";
}

void validate_indefinite_discriminant(const Natural& disc) {
  if (disc <= 0) throw std::invalid_argument("discriminant must be positive");
  unsigned long r = mpz_fdiv_ui(disc.get_mpz_t(), 4);
  if (r != 0 && r != 1) throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
  if (is_perfect_square(disc)) throw std::invalid_argument("discriminant must not be a square");
}

bool is_reduced(const QuadForm& f, const Natural& disc) {
  if (f.b <= 0 || f.b * f.b >= disc) return false;
  Integer two_a = 2 * abs(f.a);
  if ((two_a + f.b) * (two_a + f.b) <= disc) return false;
  Integer gap = two_a - f.b;
  return gap <= 0 || gap * gap < disc;
}

std::vector<QuadForm> reduced_forms(const Natural& disc, std::uint64_t max_work) {
  validate_indefinite_discriminant(disc);
  const Natural s = isqrt(disc);
  // Roughly disc/4 candidate pairs.
  if (disc / 4 > Natural(std::to_string(max_work))) {
    throw BudgetExceeded("reduced form enumeration for discriminant " + disc.get_str() +
                         " exceeds work budget");
  }
  std::vector<QuadForm> out;
  const unsigned long parity = mpz_fdiv_ui(disc.get_mpz_t(), 2);
  for (Natural b = parity == 0 ? 2 : 1; b <= s; b += 2) {
    const Natural n = (disc - b * b) / 4;  // a*c = -n
    // |a| lies strictly between (sqrt(disc) - b)/2 and (sqrt(disc) + b)/2.
    Natural lo = (s - b) / 2;
    if (lo < 1) lo = 1;
    const Natural hi = (s + b) / 2 + 1;
    for (Natural A = lo; A <= hi; ++A) {
      if (!mpz_divisible_p(n.get_mpz_t(), A.get_mpz_t())) continue;
      for (int sign : {1, -1}) {
        QuadForm f{sign * A, b, -(n / A) * sign};
        if (is_reduced(f, disc) && f.primitive()) out.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuadForm rho(const QuadForm& f, const Natural& disc) {
  if (f.c == 0) throw std::invalid_argument("rho: c = 0");
  if (f.discriminant() != disc || !f.primitive()) {
    throw std::invalid_argument("rho: " + to_string(f) + " is not a primitive form of discriminant " +
                                disc.get_str());
  }
  const Natural s = isqrt(disc);
  const Natural two_c = 2 * abs(f.c);
  // Largest r <= floor(sqrt(disc)) with r = -b (mod 2|c|); it also exceeds
  // sqrt(disc) - 2|c| because s + 1 > sqrt(disc).
  Integer r = s - mod(s + f.b, two_c);
  QuadForm g{f.c, r, (r * r - disc) / (4 * f.c)};
  if (g.discriminant() != disc || !g.primitive()) {
    throw std::logic_error("rho broke discriminant or primitivity at " + to_string(f));
  }
  return g;
}

FormClassData class_number(const Natural& disc, std::uint64_t max_work) {
  const std::vector<QuadForm> forms = reduced_forms(disc, max_work);
  FormClassData data;
  data.discriminant = disc;

  std::map<QuadForm, std::size_t> cycle_of;
  for (const QuadForm& start : forms) {
    if (cycle_of.contains(start)) continue;
    std::vector<QuadForm> cycle;
    QuadForm f = start;
    do {
      if (cycle.size() > forms.size()) throw std::logic_error("rho cycle does not close");
      cycle_of.emplace(f, data.cycles.size());
      cycle.push_back(f);
      f = rho(f, disc);
    } while (f != start);
    data.cycles.push_back(std::move(cycle));
  }
  if (cycle_of.size() != forms.size()) throw std::logic_error("rho left the reduced set");

  // Identify each cycle with the cycle of its negated forms.
  std::vector<std::size_t> parent(data.cycles.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < data.cycles.size(); ++i) {
    const QuadForm& f = data.cycles[i].front();
    std::size_t j = cycle_of.at(QuadForm{-f.a, f.b, -f.c});
    parent[find(i)] = find(j);
  }
  std::size_t wide = 0;
  for (std::size_t i = 0; i < parent.size(); ++i) wide += (find(i) == i);

  data.h_plus = static_cast<unsigned long>(data.cycles.size());
  data.h = static_cast<unsigned long>(wide);
  return data;
}

}  // namespace ramnag
