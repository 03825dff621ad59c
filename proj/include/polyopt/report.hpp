#pragma once

// Text and JSON renderings of a solve, and the brute-force oracle.

#include <ostream>
#include <string>
#include <vector>

#include "polyopt/problem.hpp"

namespace polyopt {

/// Human-readable report; `digits` fractional digits in decimal renderings.
std::string text_report(const OptimizationResult& r, const RingPtr& ring, int digits);
/// Single-line JSON document with the stable field names.
std::string json_report(const OptimizationResult& r, int digits);

/// "a/b" with an explicit denominator.
std::string fraction(const Rational& r);

struct OracleResult {
  bool exact = false;  // exhaustive enumeration over a finite sign-vector domain
  bool feasible = false;
  Rational value;  // f at `point`
  std::vector<Rational> point;
  Rational residual;           // max |f_i(point)|
  std::vector<Rational> trace;  // penalized value at the end of each stage
};

/// Exact minimum when every variable carries a constraint x^2 - 1; otherwise a
/// penalized grid descent on f + M * sum f_i^2, with M doubling between stages
/// (an estimate, never a certificate). `trace` holds one value per stage.
OracleResult oracle_bruteforce(const ProblemFile& p, int grid = 9, const Rational& penalty = 1000, int rounds = 40);

/// Status equal and, when a value is expected, alg_compare Equal.
bool matches_expectation(const OptimizationResult& r, const ExpectedResult& e);

/// Solves every .pop file under `dir` (sorted by name), one line per file.
/// Returns the number of files that failed to solve or missed their expect block.
int run_corpus(const std::string& dir, const SolveConfig& config, std::ostream& os);

}  // namespace polyopt
