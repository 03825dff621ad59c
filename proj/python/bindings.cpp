#include <pybind11/pybind11.h>

#include "polyopt/report.hpp"

namespace py = pybind11;
using namespace polyopt;

namespace {

SolveConfig config_of(std::uint64_t seed, bool check_genericity, int max_coord_retries) {
  SolveConfig c;
  c.seed = seed;
  c.check_genericity = check_genericity;
  c.max_coord_retries = max_coord_retries;
  return c;
}

std::string solve_problem(const ProblemFile& p, std::uint64_t seed, int digits, bool check_genericity, int retries) {
  OptimizationResult r;
  {
    py::gil_scoped_release release;
    r = optimize(p.objective, p.constraints, config_of(seed, check_genericity, retries));
  }
  return json_report(r, digits);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact global minimization of a polynomial on a real algebraic set";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<AssumptionFailure>(m, "AssumptionFailure", PyExc_RuntimeError);
  py::register_exception<RetryExhausted>(m, "RetryExhausted", PyExc_RuntimeError);

  m.def(
      "solve_text",
      [](const std::string& text, std::uint64_t seed, int digits, bool check_genericity, int retries) {
        return solve_problem(parse_problem(text), seed, digits, check_genericity, retries);
      },
      py::arg("text"), py::arg("seed") = 0, py::arg("digits") = 30, py::arg("check_genericity") = true,
      py::arg("max_coord_retries") = 8);

  m.def(
      "solve_file",
      [](const std::string& path, std::uint64_t seed, int digits, bool check_genericity, int retries) {
        return solve_problem(load_problem(path), seed, digits, check_genericity, retries);
      },
      py::arg("path"), py::arg("seed") = 0, py::arg("digits") = 30, py::arg("check_genericity") = true,
      py::arg("max_coord_retries") = 8);

  m.def(
      "normalize",
      [](const std::string& text) { return print_problem(parse_problem(text)); }, py::arg("text"),
      "Canonical text of a problem.");

  m.def(
      "oracle_text",
      [](const std::string& text, int grid, const std::string& penalty) {
        OracleResult o = oracle_bruteforce(parse_problem(text), grid, parse_rational(penalty));
        py::dict d;
        d["exact"] = o.exact;
        d["feasible"] = o.feasible;
        d["value"] = fraction(o.value);
        py::list point;
        for (const auto& x : o.point) point.append(fraction(x));
        d["point"] = point;
        d["residual"] = fraction(o.residual);
        return d;
      },
      py::arg("text"), py::arg("grid") = 9, py::arg("penalty") = "1000");
}
