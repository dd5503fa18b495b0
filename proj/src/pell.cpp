#include "ramnag/pell.hpp"

namespace ramnag {

namespace {

void require_same_d(const QuadInt& x, const QuadInt& y) {
  if (x.D != y.D) {
    throw std::invalid_argument("QuadInt: mixed D (" + x.D.get_str() + " vs " + y.D.get_str() + ")");
  }
}

int signum(const Integer& v) { return sgn(v) > 0 ? 1 : (sgn(v) < 0 ? -1 : 0); }

}  // namespace

int quad_sign(const Integer& a, const Integer& b, const Natural& D) {
  int sa = signum(a), sb = signum(b);
  if (sb == 0 || D == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the term with the larger square wins.
  int cmp = signum(Integer(a * a - D * b * b));
  return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

int QuadInt::sign() const { return quad_sign(a, b, D); }

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  require_same_d(x, y);
  return {x.a * y.a + x.D * x.b * y.b, x.a * y.b + x.b * y.a, x.D};
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  require_same_d(x, y);
  return {x.a + y.a, x.b + y.b, x.D};
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
  require_same_d(x, y);
  return {x.a - y.a, x.b - y.b, x.D};
}

QuadInt quad_mul(const QuadInt& x, const QuadInt& y) { return x * y; }

QuadInt quad_pow(const QuadInt& x, unsigned long n) {
  QuadInt result{1, 0, x.D};
  QuadInt base = x;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

int compare(const QuadInt& x, const QuadInt& y) { return (x - y).sign(); }

std::string to_string(const QuadInt& x) {
  std::string s = x.a.get_str();
  s += (x.b < 0 ? " - " : " + ");
  s += Integer(abs(x.b)).get_str();
  s += "*sqrt(" + x.D.get_str() + ")";
  return s;
}

SqrtContinuedFraction sqrt_continued_fraction(const Natural& D, std::size_t max_period) {
  if (D < 2) throw std::invalid_argument("sqrt_continued_fraction: D must be >= 2");
  SqrtContinuedFraction cf;
  cf.a0 = isqrt(D);
  if (cf.a0 * cf.a0 == D) {
    throw std::invalid_argument("sqrt_continued_fraction: D = " + D.get_str() + " is a perfect square");
  }
  // (m + sqrt(D)) / d with d | D - m^2.
  Natural m = 0, d = 1, a = cf.a0;
  const Natural end = 2 * cf.a0;
  do {
    if (cf.period.size() >= max_period) {
      throw BudgetExceeded("continued fraction period of sqrt(" + D.get_str() + ") exceeds " +
                           std::to_string(max_period));
    }
    m = d * a - m;
    d = (D - m * m) / d;
    a = (cf.a0 + m) / d;
    cf.period.push_back(a);
  } while (a != end);
  return cf;
}

PellFundamental least_solution(const Natural& D, std::size_t max_period) {
  SqrtContinuedFraction cf = sqrt_continued_fraction(D, max_period);
  // Convergent p/q after the last term before the closing 2*a0.
  Natural p_prev = 1, p = cf.a0;
  Natural q_prev = 0, q = 1;
  for (std::size_t i = 0; i + 1 < cf.period.size(); ++i) {
    Natural pn = cf.period[i] * p + p_prev;
    Natural qn = cf.period[i] * q + q_prev;
    p_prev = p;
    p = pn;
    q_prev = q;
    q = qn;
  }
  QuadInt unit{p, q, D};
  // Odd period: p^2 - D q^2 = -1, squaring gives the norm +1 generator.
  if (cf.period.size() % 2 == 1) unit = unit * unit;
  if (unit.norm() != 1) throw std::logic_error("least_solution: convergent has norm != 1");
  return {unit.a, unit.b, D, std::move(cf.period)};
}

}  // namespace ramnag
