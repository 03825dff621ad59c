#include <random>

#include "doctest.h"
#include "polyopt/optimize.hpp"
#include "polyopt/parse.hpp"

using namespace polyopt;

namespace {

struct Problem {
  RingPtr ring;
  MPoly f;
  std::vector<MPoly> F;
};

Problem problem(std::size_t n, const char* f, std::initializer_list<const char*> F) {
  Problem p{make_ring(n), {}, {}};
  p.f = parse_polynomial(f, p.ring);
  for (auto s : F) p.F.push_back(parse_polynomial(s, p.ring));
  return p;
}

OptimizationResult solve(const Problem& p, std::uint64_t seed = 0) {
  SolveConfig c;
  c.seed = seed;
  return optimize(p.f, p.F, c);
}

bool equals(const OptimizationResult& r, const Rational& v) {
  return r.value && alg_compare(*r.value, AlgebraicNumber::from_rational(v)) == Ordering::Equal;
}

// Every constraint vanishes exactly on the parametrized points and contains 0
// on the reported box.
void check_minimizer(const Problem& p, const OptimizationResult& r) {
  REQUIRE(r.minimizer);
  for (const auto& c : p.F) {
    CHECK(substitute_parametrization(c, r.minimizer->param).is_zero());
    CHECK(c.evaluate_box(r.minimizer->coords).contains_zero());
  }
  CHECK(p.f.evaluate_box(r.minimizer->coords).intersects(r.value->interval()) == true);
}

const Problem kCircle = problem(2, "x1 + x2", {"x1^2 + x2^2 - 1"});
const Problem kCusp = problem(2, "(x1 + 1)^2 + x2^2", {"x1^3 - x2^2"});
const Problem kHyperbola = problem(2, "x2^2", {"x1*x2 - 1"});
const Problem kNonreached = problem(3, "(x1*x2 - 1)^2 + x2^2 + 42", {"x3"});
const Problem kEmpty = problem(2, "x1", {"x1^2 + x2^2 + 1"});

}  // namespace

TEST_CASE("check_assumptions") {
  auto d = check_assumptions(kCircle.ring, kCircle.F);
  CHECK(d.d == 1);
  CHECK(d.dim_sing == -1);
  CHECK(d.warnings.size() == 2);

  auto cusp = check_assumptions(kCusp.ring, kCusp.F);
  CHECK(cusp.d == 1);
  CHECK(cusp.dim_sing == 0);

  auto r3 = make_ring(3);
  CHECK_THROWS_AS(optimize(parse_polynomial("x1", r3), {parse_polynomial("x1^2*x2", r3)}), AssumptionFailure);
}

TEST_CASE("random_coordinate_change") {
  CHECK(random_coordinate_change(4, 7, 0).is_identity());
  for (int attempt = 1; attempt < 6; ++attempt) {
    auto a = random_coordinate_change(4, 7, attempt);
    const auto& m = a.matrix();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (i == j) CHECK(m[i][j] == 1);
        if (j < i) CHECK(m[i][j] == 0);
        if (j > i) CHECK(abs(m[i][j]) <= 2 * attempt);
      }
    auto again = random_coordinate_change(4, 7, attempt);
    CHECK(again.matrix() == m);
  }
  CHECK(random_coordinate_change(4, 7, 3).matrix() != random_coordinate_change(4, 8, 3).matrix());

  auto a = random_coordinate_change(3, 1, 2);
  auto f = parse_polynomial("x1^3*x2 + x3^2 - 5", make_ring(3));
  CHECK(f.change_coordinates(a).total_degree() == 4);
}

TEST_CASE("verify_genericity") {
  auto g = ProblemGeometry::make(kHyperbola.f, kHyperbola.F);
  std::string why;
  CHECK_FALSE(verify_genericity(g, &why));
  CHECK(!why.empty());

  auto shear = CoordinateChange({{Rational(1), Rational(1)}, {Rational(0), Rational(1)}});
  auto gs = ProblemGeometry::make(kHyperbola.f.change_coordinates(shear),
                                  {kHyperbola.F[0].change_coordinates(shear)});
  CHECK(verify_genericity(gs));

  auto circle = ProblemGeometry::make(kCircle.f, kCircle.F);
  CHECK(verify_genericity(circle));
}

TEST_CASE("minimizer_in_original_coordinates") {
  RationalParametrization p;
  p.q = UPoly::from_ints({-2, 0, 1});
  p.q_coords = {UPoly::from_ints({0, 1}), UPoly::from_ints({3})};
  p.separating = {Rational(1), Rational(0)};

  auto same = minimizer_in_original_coordinates(p, CoordinateChange::identity(2));
  CHECK(same.q_coords == p.q_coords);
  CHECK(same.q == p.q);

  auto swap = minimizer_in_original_coordinates(p, CoordinateChange({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}));
  CHECK(swap.q_coords[0] == p.q_coords[1]);
  CHECK(swap.q_coords[1] == p.q_coords[0]);

  auto shear = minimizer_in_original_coordinates(p, CoordinateChange({{Rational(1), Rational(5)}, {Rational(0), Rational(1)}}));
  CHECK(shear.q_coords[0] == p.q_coords[0] + p.q_coords[1] * Rational(5));
  CHECK(shear.q_coords[1] == p.q_coords[1]);
  CHECK(shear.q0 == p.q0);

  CHECK_THROWS_AS(minimizer_in_original_coordinates(p, CoordinateChange::identity(3)), std::invalid_argument);
}

TEST_CASE("collect_candidates") {
  std::mt19937_64 rng(3);
  auto g = ProblemGeometry::make(kCircle.f, kCircle.F);
  auto sets = set_containing_local_extrema(g, rng);
  auto c = collect_candidates(g.f, sets);
  // x1 + x2 on the unit circle: critical values -sqrt 2 and sqrt 2, plus the
  // values at the sample points in between.
  REQUIRE(c.size() >= 2);
  CHECK(sign_at(UPoly::from_ints({-2, 0, 1}), c.front().value) == 0);
  CHECK(sign_at(UPoly::from_ints({-2, 0, 1}), c.back().value) == 0);
  CHECK(c.front().sources.front().kind == ValueSource::Kind::CriticalLevel);
  for (const auto& v : c) CHECK(v.has_point());
  for (std::size_t i = 0; i + 1 < c.size(); ++i) CHECK(alg_compare(c[i].value, c[i + 1].value) == Ordering::Less);

  ExtremaSets none;
  CHECK(collect_candidates(g.f, none).empty());

  ExtremaSets np_only;
  np_only.p_np = UPoly::from_ints({-6, 1, 1});
  auto v = collect_candidates(g.f, np_only);
  REQUIRE(v.size() == 2);
  CHECK_FALSE(v[0].has_point());
  CHECK(v[0].sources.front().kind == ValueSource::Kind::NonProperness);
  CHECK(alg_compare(v[0].value, AlgebraicNumber::from_rational(-3)) == Ordering::Equal);
}

TEST_CASE("bezout_bound") {
  CHECK(bezout_bound(2, 1, 2) == 2 * 4);
  CHECK(bezout_bound(3, 1, 4) == 16 * 81);
  CHECK(bezout_bound(5, 0, 2) == 32 * 6);
  CHECK(bezout_bound(2, 1, 1) == bezout_bound(2, 1, 2));
}

TEST_CASE("optimize examples") {
  auto circle = solve(kCircle);
  CHECK(circle.status == Status::Attained);
  REQUIRE(circle.value);
  CHECK(sign_at(UPoly::from_ints({-2, 0, 1}), *circle.value) == 0);
  CHECK(circle.value->decimal(4) == "-1.4142");
  check_minimizer(kCircle, circle);

  auto cusp = solve(kCusp);
  CHECK(cusp.status == Status::Attained);
  CHECK(equals(cusp, 1));
  check_minimizer(kCusp, cusp);
  for (const auto& c : cusp.minimizer->coords) CHECK(c.contains_zero());

  auto hyperbola = solve(kHyperbola);
  CHECK(hyperbola.status == Status::Unattained);
  CHECK(equals(hyperbola, 0));
  CHECK_FALSE(hyperbola.minimizer);
  CHECK(hyperbola.meta.retries >= 1);

  auto nonreached = solve(kNonreached);
  CHECK(nonreached.status == Status::Unattained);
  CHECK(equals(nonreached, 42));
  REQUIRE(nonreached.p_np);
  CHECK(sign_at(*nonreached.p_np, AlgebraicNumber::from_rational(42)) == 0);

  auto empty = solve(kEmpty);
  CHECK(empty.status == Status::RealEmpty);
  CHECK_FALSE(empty.value);

  auto line = solve(problem(2, "x1", {"x1 - x2"}));
  CHECK(line.status == Status::UnboundedBelow);

  auto points = solve(problem(2, "x1 + 2*x2", {"x1^2 - 1", "x2^2 - 4"}));
  CHECK(points.status == Status::Attained);
  CHECK(equals(points, -5));
  CHECK(points.meta.zero_dimensional_path);

  auto none = solve(problem(2, "x1", {"x1^2 + 1", "x2"}));
  CHECK(none.status == Status::RealEmpty);
}

TEST_CASE("property: seed invariance") {
  for (const auto* p : {&kCircle, &kCusp, &kHyperbola, &kNonreached}) {
    auto a = solve(*p, 1), b = solve(*p, 2);
    CHECK(a.status == b.status);
    REQUIRE(a.value);
    REQUIRE(b.value);
    CHECK(alg_compare(*a.value, *b.value) == Ordering::Equal);
  }
}

TEST_CASE("property: unattained values are bracketed by emptiness probes") {
  for (const auto* p : {&kHyperbola, &kNonreached}) {
    auto r = solve(*p);
    REQUIRE(r.status == Status::Unattained);
    REQUIRE(r.bracketing);
    std::mt19937_64 rng(11);
    auto fiber_empty = [&](const Rational& q) {
      std::vector<MPoly> gens{p->f - MPoly::constant(p->ring, q)};
      gens.insert(gens.end(), p->F.begin(), p->F.end());
      return is_empty(p->ring, gens, rng);
    };
    CHECK(alg_compare(AlgebraicNumber::from_rational(r.bracketing->lo), *r.value) == Ordering::Less);
    CHECK(alg_compare(AlgebraicNumber::from_rational(r.bracketing->hi), *r.value) == Ordering::Greater);
    CHECK(fiber_empty(r.bracketing->lo));
    CHECK_FALSE(fiber_empty(r.bracketing->hi));
  }
}

TEST_CASE("property: degrees stay under the Bezout bound") {
  for (const auto* p : {&kCircle, &kCusp, &kHyperbola, &kNonreached}) {
    auto r = solve(*p);
    CHECK(r.meta.bezout_bound > 0);
    CHECK(Integer(static_cast<unsigned long>(r.meta.max_rur_degree)) <= r.meta.bezout_bound);
    CHECK(Integer(static_cast<unsigned long>(r.meta.candidate_count)) <= r.meta.bezout_bound);
  }
}

TEST_CASE("property: attained minimizers in original coordinates satisfy F") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    auto ring = make_ring(2);
    const long a = static_cast<long>(rng() % 5) + 1, b = static_cast<long>(rng() % 7) - 3, c = static_cast<long>(rng() % 7) - 3;
    Problem p{ring, parse_polynomial(std::to_string(b) + "*x1 + " + std::to_string(c) + "*x2 + x1*x2", ring),
              {parse_polynomial("x1^2 + " + std::to_string(a) + "*x2^2 - 4", ring)}};
    auto r = solve(p, static_cast<std::uint64_t>(trial));
    CHECK(r.status == Status::Attained);
    check_minimizer(p, r);
  }
}
