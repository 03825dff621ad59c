#pragma once

// The .pop problem format:
//
//   vars: x y
//   objective: x^2 + y^2
//   constraints:
//     x + y - 1
//   expect:
//     status: attained
//     value: 1/2
//
// Expected values are rationals or `root of <poly in T> in [lo, hi]`. Blank
// lines and lines starting with '#' are ignored.

#include <optional>
#include <string>
#include <string_view>

#include "polyopt/optimize.hpp"
#include "polyopt/parse.hpp"

namespace polyopt {

struct ExpectedResult {
  Status status = Status::Attained;
  std::optional<AlgebraicNumber> value;
};

struct ProblemFile {
  RingPtr ring;
  MPoly objective;
  std::vector<MPoly> constraints;
  std::optional<ExpectedResult> expect;
};

/// Throws ParseError with the offending line and column.
ProblemFile parse_problem(std::string_view text);
/// Reads and parses a file; I/O failures throw std::runtime_error.
ProblemFile load_problem(const std::string& path);
/// Canonical text; parse_problem(print_problem(p)) reproduces p.
std::string print_problem(const ProblemFile& p);

std::optional<Status> parse_status(std::string_view s);
/// `3/4` or `root of T^2 - 2 in [1, 2]`.
AlgebraicNumber parse_expected_value(std::string_view s, int line = 1, int column_offset = 0);
std::string print_value(const AlgebraicNumber& v);

}  // namespace polyopt
