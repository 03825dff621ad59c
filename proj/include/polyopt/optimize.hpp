#pragma once

// Global infimum of f on the real points of V(F).

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polyopt/geometry.hpp"

namespace polyopt {

/// The input violates a checked assumption (positive-dimensional singular locus).
class AssumptionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every coordinate change in the budget failed; the message names the last reason.
class RetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two emptiness probes on the same open interval of values disagreed.
class ProbeDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveConfig {
  std::uint64_t seed = 0;
  int max_coord_retries = 8;
  int max_value_retries = 3;
  Rational width = pow2(-40);
  bool check_genericity = true;
  bool check_assumptions = true;
};

struct AssumptionDiagnostics {
  int d = -1;
  int dim_sing = -1;
  std::vector<std::string> warnings;
};

AssumptionDiagnostics check_assumptions(const RingPtr& ring, const std::vector<MPoly>& F);

/// Identity for attempt 0, otherwise identity plus strictly upper triangular
/// integers in [-2k, 2k].
CoordinateChange random_coordinate_change(std::size_t n, std::uint64_t seed, int attempt);

/// Polar curves and their critical points, one entry per level 1..d.
struct PolarData {
  std::vector<CurveWithFibration> curves;
  std::vector<Ideal> vpc;
};

/// Throws GenericityFailure when a curve or a critical set has the wrong dimension.
PolarData polar_data(const ProblemGeometry& g);

/// Noether position of F at dimension d and of each polar curve over its
/// free coordinate; finiteness of every critical set. `reason` receives the
/// first violation.
bool verify_genericity(const ProblemGeometry& g, const PolarData& data, std::string* reason = nullptr);
bool verify_genericity(const ProblemGeometry& g, std::string* reason = nullptr);

struct ExtremaSets {
  RationalParametrization lsp;
  std::vector<RationalParametrization> lcp;  // lcp[i - 1] for level i
  UPoly p_np = UPoly::constant(Rational(1));
};

ExtremaSets set_containing_local_extrema(const ProblemGeometry& g, const PolarData& data, std::mt19937_64& rng);
ExtremaSets set_containing_local_extrema(const ProblemGeometry& g, std::mt19937_64& rng);

struct ValueSource {
  enum class Kind { SamplePoint, CriticalLevel, NonProperness };
  Kind kind = Kind::NonProperness;
  int level = 0;               // CriticalLevel only
  std::size_t root_index = 0;  // index among the real roots of the parametrization's q

  friend bool operator==(const ValueSource& a, const ValueSource& b) {
    return a.kind == b.kind && a.level == b.level && a.root_index == b.root_index;
  }
};

struct CandidateValue {
  AlgebraicNumber value;
  std::vector<ValueSource> sources;

  bool has_point() const;
};

/// Distinct real values of f on the sample and critical points together with
/// the real roots of P_NP, ascending.
std::vector<CandidateValue> collect_candidates(const MPoly& f, const ExtremaSets& sets);

enum class Status { Attained, Unattained, RealEmpty, UnboundedBelow };

struct Minimizer {
  RationalParametrization param;
  AlgebraicNumber root;  // a real root of param.q
  std::vector<Interval> coords;
};

struct SolveMetadata {
  std::uint64_t seed = 0;
  CoordinateChange::Matrix matrix;
  int retries = 0;
  double seconds = 0;
  bool zero_dimensional_path = false;
  Integer bezout_bound = 0;
  std::size_t max_rur_degree = 0;
  std::size_t candidate_count = 0;
  std::vector<std::string> warnings;
  std::vector<std::string> retry_reasons;
};

struct OptimizationResult {
  Status status = Status::RealEmpty;
  std::optional<AlgebraicNumber> value;
  std::optional<Minimizer> minimizer;
  std::optional<UPoly> p_np;         // Unattained only
  std::optional<Interval> bracketing;  // Unattained only: open interval around the value
  SolveMetadata meta;
};

std::string to_string(Status s);

/// The loop over candidates: unbounded below, first attained value, first
/// non-properness value with a nonempty fiber above it, or empty.
OptimizationResult find_infimum(const ProblemGeometry& g, const ExtremaSets& sets,
                                const std::vector<CandidateValue>& candidates, std::mt19937_64& rng,
                                const SolveConfig& config);

/// D^(n-d) ((n-d+1)(D-1))^(d+1) with D raised to at least 2.
Integer bezout_bound(std::size_t n, int d, int D);

OptimizationResult optimize(const MPoly& f, const std::vector<MPoly>& F, const SolveConfig& config = {});

/// Coordinates x = A y of a parametrization of points y of the transformed problem.
RationalParametrization minimizer_in_original_coordinates(const RationalParametrization& p, const CoordinateChange& a);

}  // namespace polyopt
