#include "ramnag/normrep.hpp"

namespace ramnag {

namespace {

void check_pell(const Natural& D, const PellFundamental& pell) {
  if (pell.D != D) throw std::invalid_argument("Pell data is for a different D");
}

}  // namespace

HeightBound height_bound(const Natural& D, const Integer& K, unsigned long Z1,
                         const PellFundamental& pell) {
  if (Z1 == 0) throw std::invalid_argument("height_bound: Z1 must be positive");
  check_pell(D, pell);
  const Natural scale = pow(abs(K), Z1);
  HeightBound hb{QuadInt{scale * pell.U1, scale * pell.V1, D}, 0};
  // n^2 >= beta  <=>  (n^2 - a) - b sqrt(D) >= 0. Start just below sqrt(beta).
  Natural n = isqrt(hb.beta.a + isqrt(hb.beta.b * hb.beta.b * D));
  while (quad_sign(n * n - hb.beta.a, -hb.beta.b, D) < 0) ++n;
  while (n > 0 && quad_sign((n - 1) * (n - 1) - hb.beta.a, -hb.beta.b, D) >= 0) --n;
  hb.ceiling = n;
  return hb;
}

bool in_fundamental_window(const Natural& X, const Natural& Y, const Integer& N,
                           const PellFundamental& pell) {
  const Natural& D = pell.D;
  // |(X + Y sqrt D)/(X - Y sqrt D)| = (X + Y sqrt D)^2 / |N|.
  const Natural absN = abs(N);
  const Integer sq_a = X * X + D * Y * Y;
  const Integer sq_b = 2 * X * Y;
  if (quad_sign(sq_a - absN, sq_b, D) <= 0) return false;
  return quad_sign(sq_a - absN * pell.U1, sq_b - absN * pell.V1, D) < 0;
}

bool satisfies_invariants(const FundamentalRep& rep, const PellFundamental& pell) {
  if (rep.X1 < 1 || rep.Y1 < 1 || rep.Z1 == 0 || rep.D != pell.D) return false;
  const Integer N = pow(rep.K, rep.Z1);
  if (rep.X1 * rep.X1 - rep.D * rep.Y1 * rep.Y1 != N) return false;
  if (gcd(rep.X1, rep.Y1) != 1) return false;
  return in_fundamental_window(rep.X1, rep.Y1, N, pell);
}

std::vector<FundamentalRep> enumerate_fundamental(const Natural& D, const Integer& K,
                                                  unsigned long Z1, const PellFundamental& pell,
                                                  std::uint64_t max_scan) {
  if (D < 2 || is_perfect_square(D)) throw std::invalid_argument("D must be a nonsquare >= 2");
  if (mpz_even_p(K.get_mpz_t()) || abs(K) <= 1) {
    throw std::invalid_argument("K must be odd with |K| > 1");
  }
  if (gcd(D, K) != 1) throw std::invalid_argument("gcd(D, K) must be 1");
  if (Z1 == 0) throw std::invalid_argument("Z1 must be positive");
  check_pell(D, pell);

  const HeightBound hb = height_bound(D, K, Z1, pell);
  const Natural cap = hb.ceiling / isqrt(D) + 1;
  if (cap > Natural(std::to_string(max_scan))) {
    throw BudgetExceeded("fundamental solution scan for D = " + D.get_str() + ", K^Z1 = " +
                         K.get_str() + "^" + std::to_string(Z1) + " needs " + cap.get_str() +
                         " steps");
  }
  const Integer N = pow(K, Z1);
  std::vector<FundamentalRep> out;
  // value = D*Y^2 + N, advanced by D*(2Y+1).
  Integer value = D + N;
  for (Natural y = 1; y <= cap; ++y) {
    if (value > 0) {
      if (auto x = is_perfect_square(value); x && *x >= 1) {
        FundamentalRep rep{*x, y, Z1, D, K};
        if (gcd(*x, y) == 1 && in_fundamental_window(*x, y, N, pell)) out.push_back(rep);
      }
    }
    value += D * (2 * y + 1);
  }
  return out;
}

}  // namespace ramnag
