#pragma once

// Ideals of the geometric objects attached to (f, F): singular and critical
// loci, modified polar varieties and their curves, plus sample points and real
// emptiness tests.

#include <random>
#include <stdexcept>
#include <vector>

#include "polyopt/groebner.hpp"
#include "polyopt/zerodim.hpp"

namespace polyopt {

/// A construction produced a set of unexpected dimension; a different change
/// of coordinates is expected to fix it.
class GenericityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No zero-dimensional distance-critical system was found.
class SampleFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemGeometry {
  MPoly f;
  std::vector<MPoly> F;
  RingPtr ring;
  std::size_t n = 0;
  int d = 0;  // dimension of V(F)
  int D = 1;  // max total degree of f and F

  /// Computes d and D. Throws std::invalid_argument on mismatched rings.
  static ProblemGeometry make(const MPoly& f, const std::vector<MPoly>& F);
};

struct CurveWithFibration {
  Ideal ideal;
  int level = 0;
  int dim = -1;

  bool is_empty() const { return dim < 0; }
};

/// F and the (n-d)-minors of jac(F).
Ideal singular_ideal(const ProblemGeometry& g);
/// The (n-d+1)-minors of jac([f] ∪ F), without F.
std::vector<MPoly> crit_minors(const ProblemGeometry& g);
/// F and crit_minors(g).
Ideal crit_ideal(const ProblemGeometry& g);
/// W_i for 1 <= i <= d. Throws std::out_of_range otherwise.
Ideal polar_ideal(const ProblemGeometry& g, int i);
/// Closure of W_i minus the critical locus. Throws GenericityFailure when its
/// dimension exceeds 1.
CurveWithFibration polar_curve(const ProblemGeometry& g, int i);
/// The curve intersected with the critical locus. Throws GenericityFailure
/// unless the result is finite.
Ideal vpc_ideal(const ProblemGeometry& g, const CurveWithFibration& curve);
Ideal vpc_ideal(const ProblemGeometry& g, int i);

/// Squarefree polynomial in T vanishing on the values t where the restriction
/// of f to the curve fails to be proper.
UPoly set_of_non_properness(const ProblemGeometry& g, const CurveWithFibration& curve);

/// Finite set meeting every connected component of V(F) ∩ R^n, where d is the
/// dimension of V(F). Throws SampleFailure after `max_attempts` centers.
RationalParametrization real_sample_points(const RingPtr& ring, const std::vector<MPoly>& F, int d,
                                           std::mt19937_64& rng, int max_attempts = 12);

/// True iff V(gens) ∩ R^n is empty.
bool is_empty(const RingPtr& ring, const std::vector<MPoly>& gens, std::mt19937_64& rng);

}  // namespace polyopt
