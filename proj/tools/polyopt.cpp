#include <iostream>

#include "CLI11.hpp"
#include "polyopt/report.hpp"

using namespace polyopt;

namespace {

enum Exit { kSolved = 0, kFailure = 1, kParse = 2, kAssumption = 3, kRetries = 4 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact global minimization of a polynomial on a real algebraic set"};
  app.require_subcommand(1);

  SolveConfig config;
  std::string file;
  bool json = false;
  int digits = 30;
  bool no_genericity = false;

  auto* solve = app.add_subcommand("solve", "Solve one problem file");
  solve->add_option("file", file, "Problem file (.pop)")->required();
  solve->add_flag("--json", json, "Print the result as JSON");
  solve->add_option("--seed", config.seed, "Random seed");
  solve->add_option("--digits", digits, "Decimal digits in the report")->check(CLI::Range(1, 1000));
  solve->add_flag("--no-genericity-check", no_genericity, "Skip the Noether position checks");
  solve->add_option("--max-coord-retries", config.max_coord_retries, "Coordinate changes to try")->check(CLI::PositiveNumber);
  solve->add_option("--max-value-retries", config.max_value_retries, "Redraws of a disagreeing emptiness probe")
      ->check(CLI::PositiveNumber);

  int grid = 9;
  std::string penalty = "1000";
  auto* oracle = app.add_subcommand("oracle", "Brute-force estimate of the minimum");
  oracle->add_option("file", file, "Problem file (.pop)")->required();
  oracle->add_option("--grid", grid, "Grid points per coordinate step")->check(CLI::Range(2, 1000));
  oracle->add_option("--penalty", penalty, "Penalty weight M on the squared constraints");

  std::string dir;
  auto* corpus = app.add_subcommand("corpus", "Solve every .pop file in a directory");
  corpus->add_option("dir", dir, "Directory")->required();
  corpus->add_option("--seed", config.seed, "Random seed");

  CLI11_PARSE(app, argc, argv);
  config.check_genericity = !no_genericity;

  if (*corpus) {
    try {
      return run_corpus(dir, config, std::cout) == 0 ? kSolved : kFailure;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kFailure;
    }
  }

  ProblemFile problem;
  try {
    problem = load_problem(file);
  } catch (const ParseError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }

  if (*oracle) {
    Rational m;
    try {
      m = parse_rational(penalty);
    } catch (const std::exception&) {
      std::cerr << "error: --penalty expects a rational\n";
      return kParse;
    }
    OracleResult o = oracle_bruteforce(problem, grid, m);
    if (o.exact && !o.feasible) {
      std::cout << "no feasible sign vector\n";
      return kSolved;
    }
    std::cout << (o.exact ? "exact minimum: " : "upper estimate: ") << to_string(o.value) << " ~ "
              << to_decimal(o.value, 12) << "\n";
    std::cout << "point:";
    for (const auto& x : o.point) std::cout << " " << to_string(x);
    std::cout << "\nconstraint residual: " << to_decimal(o.residual, 12) << "\n";
    if (!o.trace.empty()) {
      std::cout << "penalized trace:";
      for (const auto& t : o.trace) std::cout << " " << to_decimal(t, 8);
      std::cout << "\n";
    }
    return kSolved;
  }

  try {
    OptimizationResult r = optimize(problem.objective, problem.constraints, config);
    if (json) {
      std::cout << json_report(r, digits) << "\n";
    } else {
      std::cout << text_report(r, problem.ring, digits);
      for (const auto& w : r.meta.warnings) std::cout << "warning: " << w << "\n";
    }
    return kSolved;
  } catch (const AssumptionFailure& e) {
    std::cerr << "assumption check failed: " << e.what() << "\n";
    return kAssumption;
  } catch (const RetryExhausted& e) {
    std::cerr << "retry budget exhausted: " << e.what() << "\n";
    return kRetries;
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kFailure;
  }
}
