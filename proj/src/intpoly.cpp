#include "ramnag/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace ramnag {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::vector<Integer> c;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    c.push_back(parse_integer(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(const Integer& c, unsigned degree) {
  std::vector<Integer> v(degree + 1, Integer(0));
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

Integer IntPolynomial::operator()(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<Integer> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) { return p + (-q); }

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Integer> c(p.coeffs_.size() + q.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Integer& k, const IntPolynomial& p) {
  std::vector<Integer> c = p.coeffs_;
  for (auto& x : c) x *= k;
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1 && i > 0);
    if (!unit) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string IntPolynomial::to_csv() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += coeffs_[i].get_str();
  }
  return s;
}

SquareDecomposition truncated_square_root(const IntPolynomial& F) {
  const int deg = F.degree();
  if (deg < 2 || deg % 2 != 0) {
    throw std::invalid_argument("truncated_square_root: F must have even degree >= 2");
  }
  if (F.leading() != 1) throw std::invalid_argument("truncated_square_root: F must be monic");
  const unsigned n = static_cast<unsigned>(deg / 2);

  // g[i] is the coefficient of t^i in G; g[n] = 1. Matching the coefficient
  // of t^(2n-j) in G^2 against F determines g[n-j] for j = 1..n.
  std::vector<mpq_class> g(n + 1);
  g[n] = 1;
  for (unsigned j = 1; j <= n; ++j) {
    mpq_class cross = 0;
    for (unsigned i = 1; i < j; ++i) cross += g[n - i] * g[n - j + i];
    g[n - j] = (mpq_class(F.coeff(2 * n - j)) - cross) / 2;
  }

  SquareDecomposition out;
  std::vector<Integer> gi;
  for (auto& c : g) {
    c.canonicalize();
    if (c.get_den() != 1) return out;
    gi.push_back(c.get_num());
  }
  IntPolynomial G(std::move(gi));
  out.integral = true;
  out.R = F - G * G;
  out.G = std::move(G);
  return out;
}

Natural positivity_threshold(const IntPolynomial& P, std::uint64_t max_scan) {
  if (P.is_zero() || P.leading() <= 0) {
    throw std::invalid_argument("positivity_threshold: leading coefficient must be positive");
  }
  Integer max_abs = 0;
  for (int i = 0; i < P.degree(); ++i) max_abs = std::max(max_abs, Integer(abs(P.coeff(i))));
  // Cauchy: every real root lies in |t| < 1 + max|a_i|/a_lead, so P(t) > 0 for t >= bound.
  Integer bound = 1 + max_abs / P.leading() + 1;
  if (bound > Integer(std::to_string(max_scan))) {
    throw BudgetExceeded("positivity_threshold: root bound " + bound.get_str() +
                         " exceeds scan budget");
  }
  for (Integer t = bound; t >= 1; --t) {
    if (P(t) <= 0) return t + 1;
  }
  return 1;
}

}  // namespace ramnag
