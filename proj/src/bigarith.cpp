#include "ramnag/bigarith.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace ramnag {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](unsigned char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

std::string to_string(const Integer& n) { return n.get_str(10); }

Natural isqrt(const Natural& n) {
  if (sgn(n) < 0) throw std::invalid_argument("isqrt of a negative number");
  if (n < 2) return n;
  // Start above the root; Newton then decreases monotonically to floor(sqrt(n)).
  Natural x = Natural(1) << ((mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2);
  while (true) {
    Natural y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

namespace {

// Quadratic residue tables for cheap rejection before the exact root.
struct SquareFilter {
  std::array<bool, 64> mod64{};
  std::array<bool, 63> mod63{};
  std::array<bool, 65> mod65{};
  std::array<bool, 11> mod11{};
  SquareFilter() {
    for (unsigned i = 0; i < 64; ++i) mod64[(i * i) % 64] = true;
    for (unsigned i = 0; i < 63; ++i) mod63[(i * i) % 63] = true;
    for (unsigned i = 0; i < 65; ++i) mod65[(i * i) % 65] = true;
    for (unsigned i = 0; i < 11; ++i) mod11[(i * i) % 11] = true;
  }
};

const SquareFilter& square_filter() {
  static const SquareFilter f;
  return f;
}

}  // namespace

std::optional<Natural> is_perfect_square(const Natural& n) {
  if (sgn(n) < 0) return std::nullopt;
  const auto& f = square_filter();
  if (!f.mod64[mpz_fdiv_ui(n.get_mpz_t(), 64)]) return std::nullopt;
  unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 63UL * 65 * 11);
  if (!f.mod63[r % 63] || !f.mod65[r % 65] || !f.mod11[r % 11]) return std::nullopt;
  Natural s = isqrt(n);
  if (s * s == n) return s;
  return std::nullopt;
}

int jacobi(const Integer& a_in, const Natural& n_in) {
  if (sgn(n_in) <= 0 || mpz_even_p(n_in.get_mpz_t())) {
    throw std::invalid_argument("jacobi: modulus must be odd and positive");
  }
  Natural n = n_in;
  Natural a = mod(a_in, n);
  int result = 1;
  while (a != 0) {
    while (mpz_even_p(a.get_mpz_t())) {
      a >>= 1;
      unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) {
      result = -result;
    }
    a %= n;
  }
  return n == 1 ? result : 0;
}

Natural gcd(const Integer& a, const Integer& b) {
  Natural g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Natural mod(const Integer& a, const Natural& m) {
  Natural r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

namespace {

constexpr std::array<unsigned, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

Natural powm(const Natural& b, const Natural& e, const Natural& m) {
  Natural r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

bool is_probable_prime(const Natural& n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Natural d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  const Natural n_minus_1 = n - 1;
  for (unsigned w : kWitnesses) {
    Natural x = powm(Natural(w), d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial factor or nullopt when
// the iteration allowance runs out.
std::optional<Natural> pollard_brent(const Natural& n, unsigned long c,
                                     std::uint64_t& allowance) {
  constexpr std::uint64_t kBatch = 128;
  Natural y = 2, x, ys, q = 1, g = 1;
  std::uint64_t r = 1;
  auto f = [&](const Natural& v) { return Natural((v * v + c) % n); };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      std::uint64_t m = std::min(kBatch, r - k);
      if (allowance < m) return std::nullopt;
      allowance -= m;
      for (std::uint64_t i = 0; i < m; ++i) {
        y = f(y);
        q = q * abs(x - y) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  if (g == n) return std::nullopt;
  return g;
}

void split(const Natural& n, std::map<Natural, unsigned>& out, std::uint64_t& allowance) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (auto s = is_perfect_square(n)) {
    split(*s, out, allowance);
    split(*s, out, allowance);
    return;
  }
  for (unsigned long c = 1; allowance > 0; ++c) {
    if (auto d = pollard_brent(n, c, allowance)) {
      split(*d, out, allowance);
      split(n / *d, out, allowance);
      return;
    }
  }
  throw BudgetExceeded("factorization budget exhausted on composite cofactor " + to_string(n));
}

}  // namespace

Factorization factorize(const Natural& n_in, const FactorBudget& budget) {
  if (n_in <= 1) throw std::invalid_argument("factorize requires n > 1");
  std::map<Natural, unsigned> found;
  Natural n = n_in;
  auto strip = [&](unsigned long p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++found[Natural(p)];
    }
  };
  strip(2);
  std::uint64_t p = 3;
  for (; p <= budget.trial_limit; p += 2) {
    if (Natural(p) * p > n) break;
    strip(static_cast<unsigned long>(p));
  }
  if (n > 1) {
    if (Natural(p) * p > n) {
      ++found[n];
    } else {
      std::uint64_t allowance = budget.rho_iterations;
      split(n, found, allowance);
    }
  }
  Factorization f;
  for (auto& [prime, e] : found) f.push_back({prime, e});
  return f;
}

Natural reassemble(const Factorization& f) {
  Natural n = 1;
  for (const auto& pp : f) n *= pow(pp.prime, pp.exponent);
  return n;
}

std::vector<Natural> divisors(const Natural& n, const FactorBudget& budget) {
  if (n < 1) throw std::invalid_argument("divisors requires n >= 1");
  std::vector<Natural> out{1};
  if (n == 1) return out;
  for (const auto& [p, e] : factorize(n, budget)) {
    std::size_t base = out.size();
    Natural pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ramnag
