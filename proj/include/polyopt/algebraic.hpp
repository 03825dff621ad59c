#pragma once

// Real root isolation and real algebraic numbers given by an annihilating
// polynomial and an isolating interval.

#include <random>
#include <vector>

#include "polyopt/interval.hpp"
#include "polyopt/upoly.hpp"

namespace polyopt {

/// Sturm sequence p, p', -rem(p, p'), ... with every element content-free
/// (positive rescaling only, so sign patterns are preserved).
std::vector<UPoly> sturm_sequence(const UPoly& p);
int sign_variations(const std::vector<UPoly>& seq, const Rational& x);
/// Number of distinct real roots of seq[0] in (a, b].
int sturm_count(const std::vector<UPoly>& seq, const Rational& a, const Rational& b);
/// Number of distinct real roots of p over R.
int real_root_count(const UPoly& p);
/// A power of two strictly larger than the modulus of every complex root.
Rational root_bound(const UPoly& p);

/// Sorted, pairwise disjoint isolating intervals for the distinct real roots
/// of p. Endpoints of non-degenerate intervals are never roots.
std::vector<Interval> real_root_isolation(const UPoly& p);

enum class Ordering { Less, Equal, Greater };

class AlgebraicNumber {
 public:
  /// The annihilator is replaced by its normalized squarefree part. Throws
  /// std::invalid_argument unless it has exactly one root in `isolating`.
  AlgebraicNumber(const UPoly& annihilator, Interval isolating);

  static AlgebraicNumber from_rational(const Rational& r);
  /// All real roots of p, ascending.
  static std::vector<AlgebraicNumber> real_roots(const UPoly& p);

  const UPoly& annihilator() const { return annihilator_; }
  const Interval& interval() const { return interval_; }
  /// True once the interval has collapsed onto a rational root.
  bool is_rational() const { return interval_.is_point(); }
  /// The exact value when the annihilator is linear or the interval is a point.
  bool exact_rational(Rational& out) const;

  /// Same number, isolating interval of width <= width inside the old one.
  AlgebraicNumber refined(const Rational& width) const;
  /// The same number as an exact rational when it is one; unchanged otherwise.
  AlgebraicNumber simplified() const;
  /// Decimal truncation of the value to `digits` places (display only).
  std::string decimal(int digits) const;

 private:
  struct Unchecked {};
  AlgebraicNumber(UPoly annihilator, Interval isolating, Unchecked);
  friend class AlgebraicRefiner;

  UPoly annihilator_;
  Interval interval_;
};

/// Mutable bisection state for one algebraic number.
class AlgebraicRefiner {
 public:
  explicit AlgebraicRefiner(const AlgebraicNumber& a);
  /// One bisection step; no-op on a point interval.
  void step();
  void refine_to(const Rational& width);
  const Interval& interval() const { return iv_; }
  AlgebraicNumber value() const;

 private:
  UPoly p_;
  Interval iv_;
  int sign_lo_ = 0;
};

Ordering alg_compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
/// Exact sign of p at a.
int sign_at(const UPoly& p, const AlgebraicNumber& a);

/// A dyadic rational strictly between a and b. Throws std::invalid_argument
/// unless a < b.
Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b, std::mt19937_64& rng);
/// A dyadic rational strictly below a.
Rational rational_below(const AlgebraicNumber& a, std::mt19937_64& rng);
/// A dyadic rational strictly above a.
Rational rational_above(const AlgebraicNumber& a, std::mt19937_64& rng);

/// Polynomial in u whose coefficients are polynomials in T (lowest u-degree first).
using BivariatePoly = std::vector<UPoly>;

/// Res_u(p, q) in Q[T] by the subresultant remainder sequence.
UPoly bivariate_resultant(BivariatePoly p, BivariatePoly q);

}  // namespace polyopt
