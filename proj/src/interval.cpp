#include "polyopt/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyopt {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw std::invalid_argument("interval with lo > hi");
}

int Interval::strict_sign() const {
  if (lo > 0) return 1;
  if (hi < 0) return -1;
  return 0;
}

std::string Interval::to_string() const { return "[" + polyopt::to_string(lo) + ", " + polyopt::to_string(hi) + "]"; }

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo + b.lo, a.hi + b.hi); }
Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo - b.hi, a.hi - b.lo); }
Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_point()) return b * a.lo;
  if (b.is_point()) return a * b.lo;
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Interval operator*(const Interval& a, const Rational& c) {
  if (c >= 0) return Interval(a.lo * c, a.hi * c);
  return Interval(a.hi * c, a.lo * c);
}

Interval operator+(const Interval& a, const Rational& c) { return Interval(a.lo + c, a.hi + c); }

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  Interval inv(1 / b.hi, 1 / b.lo);
  return a * inv;
}

Interval pow(const Interval& a, unsigned e) {
  if (e == 0) return Interval::point(Rational(1));
  if (e % 2 == 0) {
    Rational l = abs(a.lo), h = abs(a.hi);
    Rational mx = l > h ? l : h;
    Rational mn = a.contains_zero() ? Rational(0) : (l < h ? l : h);
    Rational pmx = 1, pmn = 1;
    for (unsigned i = 0; i < e; ++i) {
      pmx *= mx;
      pmn *= mn;
    }
    return Interval(pmn, pmx);
  }
  // odd powers are monotone
  Rational pl = 1, ph = 1;
  for (unsigned i = 0; i < e; ++i) {
    pl *= a.lo;
    ph *= a.hi;
  }
  return Interval(pl, ph);
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi);
}

Interval evaluate(const UPoly& p, const Interval& x) {
  const auto& c = p.coefficients();
  if (c.empty()) return Interval::point(Rational(0));
  if (x.is_point()) return Interval::point(p(x.lo));
  Interval acc = Interval::point(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * x + c[k];
  if (p.degree() < 2) return acc;
  // Mean-value form; both enclosures are valid, so keep their intersection.
  const Rational m = x.midpoint();
  Interval centered = evaluate(p.derivative(), x) * (x + Rational(-m)) + p(m);
  return Interval(acc.lo > centered.lo ? acc.lo : centered.lo, acc.hi < centered.hi ? acc.hi : centered.hi);
}

}  // namespace polyopt
