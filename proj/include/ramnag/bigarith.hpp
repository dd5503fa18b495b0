#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ramnag {

using Integer = mpz_class;
// Nonnegative by contract; checked at API boundaries.
using Natural = mpz_class;

// Thrown when a computation would exceed one of the configured work limits.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FactorBudget {
  std::uint64_t trial_limit = 1'000'000;
  // Total Pollard-Brent iterations across all attempts for one input.
  std::uint64_t rho_iterations = 20'000'000;
};

struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& n);

Natural isqrt(const Natural& n);

// Returns the root when n is a perfect square.
std::optional<Natural> is_perfect_square(const Natural& n);

// Jacobi symbol (a/n) for odd n >= 1; (a/1) = 1.
int jacobi(const Integer& a, const Natural& n);

Natural gcd(const Integer& a, const Integer& b);

// Miller-Rabin with the first thirteen prime bases; deterministic below 3.3e24.
bool is_probable_prime(const Natural& n);

// Complete factorization ordered by prime. Throws BudgetExceeded when a
// composite cofactor survives trial division and the rho budget.
Factorization factorize(const Natural& n, const FactorBudget& budget = {});

Natural reassemble(const Factorization& f);

// Positive divisors of n (n >= 1) in increasing order.
std::vector<Natural> divisors(const Natural& n, const FactorBudget& budget = {});

Integer pow(const Integer& base, unsigned long exponent);

// Least nonnegative residue.
Natural mod(const Integer& a, const Natural& m);

}  // namespace ramnag
