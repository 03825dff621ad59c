#pragma once

// Closed intervals with exact rational endpoints and the handful of interval
// operations needed to enclose polynomial values.

#include <string>

#include "polyopt/rational.hpp"
#include "polyopt/upoly.hpp"

namespace polyopt {

struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational l, Rational h);
  static Interval point(const Rational& x) { return Interval(x, x); }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  /// Sign of every element, or 0 when the interval straddles or touches zero.
  int strict_sign() const;

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
  std::string to_string() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Rational& c);
Interval operator+(const Interval& a, const Rational& c);
/// Requires 0 outside b.
Interval operator/(const Interval& a, const Interval& b);
/// Naive power by repeated multiplication for odd e, tight for even e.
Interval pow(const Interval& a, unsigned e);
Interval hull(const Interval& a, const Interval& b);

/// Encloses {p(x) : x in box} by Horner's scheme.
Interval evaluate(const UPoly& p, const Interval& x);

}  // namespace polyopt
