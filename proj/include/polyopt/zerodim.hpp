#pragma once

// Finite algebraic sets: radicals, rational univariate parametrizations and
// their real points.

#include <random>
#include <stdexcept>
#include <vector>

#include "polyopt/algebraic.hpp"
#include "polyopt/groebner.hpp"

namespace polyopt {

/// The points (q_1(u)/q_0(u), ..., q_n(u)/q_0(u)) for the roots u of q, where
/// u = separating . X. q = 1 encodes the empty set.
struct RationalParametrization {
  UPoly q = UPoly::constant(Rational(1));
  UPoly q0 = UPoly::constant(Rational(1));
  std::vector<UPoly> q_coords;
  std::vector<Rational> separating;

  bool is_empty() const { return q.degree() < 1; }
  std::size_t degree() const { return is_empty() ? 0 : static_cast<std::size_t>(q.degree()); }
  std::size_t nvars() const { return q_coords.size(); }
};

struct RealPoint {
  AlgebraicNumber root;
  std::vector<Interval> coords;
};

/// Raised when no separating linear form was found within the retry budget.
class RurFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Standard monomials of a zero-dimensional grevlex basis, ascending.
std::vector<Monomial> staircase(const std::vector<MPoly>& basis, const MonomialOrder& order);
/// dim_Q Q[X]/I; 0 for the unit ideal. Throws for positive-dimensional input.
std::size_t quotient_dimension(const Ideal& ideal);

/// I + <squarefree part of the generator of I ∩ Q[X_i]>, i = 1..n.
/// Throws std::invalid_argument for positive-dimensional or unit input.
Ideal zero_dim_radical(const Ideal& ideal);

/// Characteristic polynomial of multiplication by f on Q[X]/I (multiplicities
/// kept). The unit ideal yields 1.
UPoly characteristic_polynomial(const MPoly& f, const Ideal& ideal);

/// Parametrization of V(I) for a zero-dimensional I (radicalized internally).
/// The unit ideal yields q = 1.
RationalParametrization rur(const Ideal& ideal, std::mt19937_64& rng, int max_attempts = 40);

/// Numerator of g(q_1/q_0, ..., q_n/q_0) with denominator q_0^deg(g), reduced
/// modulo q.
UPoly substitute_parametrization(const MPoly& g, const RationalParametrization& p);

/// Squarefree polynomial in T whose roots are the values of f on V(P).
UPoly image_annihilator(const MPoly& f, const RationalParametrization& p);
/// Same result computed through the resultant in every case.
UPoly image_annihilator_resultant(const MPoly& f, const RationalParametrization& p);

/// One entry per real root of q, ascending, with coordinate boxes of width at
/// most `width`.
std::vector<RealPoint> real_points(const RationalParametrization& p, const Rational& width);

/// Coordinate box of width at most `width` at one root of q.
std::vector<Interval> point_box(const RationalParametrization& p, const AlgebraicNumber& root, const Rational& width);

}  // namespace polyopt
