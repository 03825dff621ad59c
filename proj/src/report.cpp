#include "polyopt/report.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

#include "json.hpp"

namespace polyopt {

namespace {

using nlohmann::json;

Rational decimal_width(int digits) {
  Rational w = 1;
  for (int i = 0; i < digits; ++i) w /= 10;
  return w;
}

json coeffs(const UPoly& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(fraction(c));
  return a;
}

json pair(const Interval& iv) { return json::array({fraction(iv.lo), fraction(iv.hi)}); }

std::string interval_text(const Interval& iv) { return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]"; }

// Monomials with double coefficients for fast evaluation in the grid search.
struct FastPoly {
  std::vector<std::pair<double, std::vector<unsigned>>> terms;

  explicit FastPoly(const MPoly& p) {
    for (const auto& t : p.terms()) {
      std::vector<unsigned> e(p.nvars());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.m.e[i];
      terms.emplace_back(t.c.get_d(), std::move(e));
    }
  }

  double operator()(const std::vector<double>& x) const {
    double acc = 0;
    for (const auto& [c, e] : terms) {
      double v = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) v *= x[i];
      acc += v;
    }
    return acc;
  }
};

bool is_sign_constraint(const MPoly& c, std::size_t var) {
  MPoly target = MPoly::variable(c.ring(), var) * MPoly::variable(c.ring(), var) - MPoly::constant(c.ring(), 1);
  const auto order = MonomialOrder::grevlex(c.nvars());
  return c.primitive(order) == target.primitive(order);
}

}  // namespace

std::string fraction(const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

std::string text_report(const OptimizationResult& r, const RingPtr& ring, int digits) {
  std::ostringstream os;
  os << "status: " << to_string(r.status) << "\n";
  if (r.value) {
    AlgebraicNumber v = r.value->refined(decimal_width(digits));
    os << "value: " << v.decimal(digits) << "\n";
    os << "annihilator: " << v.annihilator().to_string("T") << "\n";
    os << "interval: " << interval_text(v.interval()) << "\n";
  } else if (r.status == Status::RealEmpty) {
    os << "value: +inf\n";
  } else if (r.status == Status::UnboundedBelow) {
    os << "value: -inf\n";
  }
  if (r.minimizer) {
    os << "minimizer:\n";
    for (std::size_t i = 0; i < r.minimizer->coords.size(); ++i) {
      const Interval& c = r.minimizer->coords[i];
      os << "  " << ring->name(i) << " in " << interval_text(c) << "  ~ " << to_decimal(c.midpoint(), std::min(digits, 12))
         << "\n";
    }
    os << "  parametrization degree: " << r.minimizer->param.degree() << "\n";
  }
  if (r.p_np) os << "non-properness polynomial: " << r.p_np->to_string("T") << "\n";
  if (r.bracketing) os << "empty fiber below " << to_string(r.bracketing->lo) << ", nonempty at " << to_string(r.bracketing->hi) << "\n";
  os << "seed: " << r.meta.seed << "\n";
  os << "matrix: [";
  for (std::size_t i = 0; i < r.meta.matrix.size(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < r.meta.matrix[i].size(); ++j) os << (j ? ", " : "") << to_string(r.meta.matrix[i][j]);
    os << "]";
  }
  os << "]\n";
  os << "retries: " << r.meta.retries << "\n";
  if (r.meta.zero_dimensional_path) os << "note: finite constraint set, solved directly\n";
  os << "time: " << r.meta.seconds << " s\n";
  return os.str();
}

std::string json_report(const OptimizationResult& r, int digits) {
  json j;
  j["status"] = to_string(r.status);
  if (r.value) {
    AlgebraicNumber v = r.value->refined(decimal_width(digits));
    j["value"] = {{"annihilator", coeffs(v.annihilator())}, {"interval", pair(v.interval())}, {"decimal", v.decimal(digits)}};
  } else {
    j["value"] = nullptr;
  }
  if (r.minimizer) {
    json coords = json::array();
    for (const auto& c : r.minimizer->coords) coords.push_back(pair(c));
    j["minimizer"] = {{"q", coeffs(r.minimizer->param.q)},
                      {"q0", coeffs(r.minimizer->param.q0)},
                      {"coords", coords},
                      {"root_interval", pair(r.minimizer->root.interval())}};
  } else {
    j["minimizer"] = nullptr;
  }
  j["p_np"] = r.p_np ? coeffs(*r.p_np) : json(nullptr);
  j["seed"] = r.meta.seed;
  json m = json::array();
  for (const auto& row : r.meta.matrix) {
    json jr = json::array();
    for (const auto& x : row) jr.push_back(fraction(x));
    m.push_back(jr);
  }
  j["matrix"] = m;
  j["retries"] = r.meta.retries;
  return j.dump();
}

OracleResult oracle_bruteforce(const ProblemFile& p, int grid, const Rational& penalty, int rounds) {
  const std::size_t n = p.ring->size();
  OracleResult out;
  auto finish = [&](std::vector<Rational> x) {
    out.point = std::move(x);
    out.value = p.objective.evaluate(out.point);
    out.residual = 0;
    for (const auto& c : p.constraints) out.residual = std::max(out.residual, Rational(abs(c.evaluate(out.point))));
    out.feasible = out.residual == 0;
    return out;
  };

  bool finite = n <= 20;
  for (std::size_t i = 0; i < n && finite; ++i)
    finite = std::any_of(p.constraints.begin(), p.constraints.end(),
                         [&](const MPoly& c) { return is_sign_constraint(c, i); });
  if (finite) {
    out.exact = true;
    std::optional<std::vector<Rational>> best;
    Rational best_value;
    std::vector<Rational> x(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1 ? -1 : 1;
      bool ok = std::all_of(p.constraints.begin(), p.constraints.end(),
                            [&](const MPoly& c) { return c.evaluate(x) == 0; });
      if (!ok) continue;
      Rational v = p.objective.evaluate(x);
      if (!best || v < best_value) {
        best = x;
        best_value = v;
      }
    }
    if (!best) return out;
    return finish(*best);
  }

  FastPoly f(p.objective);
  std::vector<FastPoly> cons;
  for (const auto& c : p.constraints) cons.emplace_back(c);
  double m = penalty.get_d();
  auto g = [&](const std::vector<double>& x) {
    double v = f(x);
    for (const auto& c : cons) {
      double r = c(x);
      v += m * r * r;
    }
    return v;
  };
  MPoly residual(p.ring);
  for (const auto& c : p.constraints) residual += c * c;

  // Coordinate sweeps over the dyadic grid x_i + k h with h = 1, 1/2, ...,
  // 2^(1 - rounds), repeated in rounds / 2 stages that double the penalty weight.
  std::vector<Rational> x(n, Rational(0));
  std::vector<double> xd(n, 0.0);
  Rational weight = penalty;
  const int half = std::max(1, grid / 2);
  for (int stage = 0; stage < std::max(1, rounds / 2); ++stage) {
    Rational h = 1;
    for (int level = 0; level < rounds; ++level, h /= 2) {
      for (int sweep = 0; sweep < 1000; ++sweep) {
        bool moved = false;
        for (std::size_t i = 0; i < n; ++i) {
          double best = g(xd);
          int best_k = 0;
          const double x0 = xd[i];
          for (int k = -half; k <= half; ++k) {
            if (k == 0) continue;
            xd[i] = x0 + k * h.get_d();
            double v = g(xd);
            if (v < best) {
              best = v;
              best_k = k;
            }
          }
          xd[i] = x0;
          if (best_k != 0) {
            x[i] += h * best_k;
            xd[i] = x[i].get_d();
            moved = true;
          }
        }
        if (!moved) break;
      }
    }
    out.trace.push_back(p.objective.evaluate(x) + weight * residual.evaluate(x));
    weight *= 2;
    m = weight.get_d();
  }
  return finish(x);
}

bool matches_expectation(const OptimizationResult& r, const ExpectedResult& e) {
  if (r.status != e.status) return false;
  if (!e.value) return true;
  return r.value && alg_compare(*r.value, *e.value) == Ordering::Equal;
}

int run_corpus(const std::string& dir, const SolveConfig& config, std::ostream& os) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".pop") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  int failures = 0;
  for (const auto& path : files) {
    const std::string name = path.stem().string();
    try {
      ProblemFile p = load_problem(path.string());
      OptimizationResult r = optimize(p.objective, p.constraints, config);
      std::string value = r.value ? r.value->decimal(12) : (r.status == Status::RealEmpty ? "+inf" : "-inf");
      std::string verdict = "solved";
      if (p.expect) {
        bool ok = matches_expectation(r, *p.expect);
        verdict = ok ? "ok" : "MISMATCH";
        if (!ok) ++failures;
      }
      os << name << ": " << to_string(r.status) << " " << value << " (" << r.meta.seconds << " s) " << verdict << "\n";
    } catch (const std::exception& e) {
      ++failures;
      os << name << ": FAILED " << e.what() << "\n";
    }
    os.flush();
  }
  return failures;
}

}  // namespace polyopt
