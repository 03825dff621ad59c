#include <random>

#include "doctest.h"
#include "polyopt/geometry.hpp"
#include "polyopt/parse.hpp"

using namespace polyopt;

namespace {

ProblemGeometry problem(std::size_t n, const char* f, std::initializer_list<const char*> F) {
  auto r = make_ring(n);
  std::vector<MPoly> cons;
  for (auto s : F) cons.push_back(parse_polynomial(s, r));
  return ProblemGeometry::make(parse_polynomial(f, r), cons);
}

std::vector<MPoly> Ps(const RingPtr& r, std::initializer_list<const char*> ss) {
  std::vector<MPoly> out;
  for (auto s : ss) out.push_back(parse_polynomial(s, r));
  return out;
}

// Real points of a finite ideal, boxes of width 2^-30.
std::vector<RealPoint> points_of(const Ideal& i) {
  std::mt19937_64 rng(0);
  return real_points(rur(i, rng), pow2(-30));
}

bool vanishes_on(const std::vector<MPoly>& gens, const std::vector<Interval>& box) {
  for (const auto& g : gens)
    if (!g.evaluate_box(box).contains_zero()) return false;
  return true;
}

const UPoly T = UPoly::variable();

}  // namespace

TEST_CASE("problem geometry") {
  auto g = problem(3, "x1^2 + x2^3", {"x3", "x1 - x2"});
  CHECK(g.n == 3);
  CHECK(g.d == 1);
  CHECK(g.D == 3);
}

TEST_CASE("singular locus") {
  auto cusp = problem(2, "(x1+1)^2 + x2^2", {"x1^3 - x2^2"});
  auto s = singular_ideal(cusp);
  CHECK(zero_dim_radical(s).basis() == Ps(cusp.ring, {"x2", "x1"}));
  CHECK(singular_ideal(problem(2, "x1", {"x1^2 + x2^2 - 1"})).is_unit());
  auto cross = problem(2, "x1", {"x1*x2"});
  CHECK(zero_dim_radical(singular_ideal(cross)).basis() == Ps(cross.ring, {"x2", "x1"}));
}

TEST_CASE("critical locus") {
  auto circle = problem(2, "x1", {"x1^2 + x2^2 - 1"});
  CHECK(crit_ideal(circle).basis() == Ps(circle.ring, {"x2", "x1^2 - 1"}));

  auto lagrange = problem(2, "x1 + x2", {"x1^2 + x2^2 - 1"});
  auto pts = points_of(crit_ideal(lagrange));
  REQUIRE(pts.size() == 2);
  for (const auto& p : pts) {
    // x1 = x2 = ±1/√2
    CHECK(p.coords[0].intersects(p.coords[1]));
    Interval sq = p.coords[0] * p.coords[0];
    CHECK(sq.lo <= Rational(1, 2));
    CHECK(sq.hi >= Rational(1, 2));
  }

  auto cusp = problem(2, "(x1+1)^2 + x2^2", {"x1^3 - x2^2"});
  Ideal cusp_crit = crit_ideal(cusp);
  for (const auto& g : cusp_crit.generators()) CHECK(g.evaluate({Rational(0), Rational(0)}) == 0);
}

TEST_CASE("singular points lie in the critical locus") {
  for (auto g : {problem(2, "(x1+1)^2 + x2^2", {"x1^3 - x2^2"}), problem(2, "x1 + 2*x2", {"x1*x2"}),
                 problem(2, "x2", {"(x1^2 + x2^2 - 1)*(x1 - 3)"}), problem(3, "x1*x3", {"x1^2 - x2^3", "x3 - 1"})}) {
    auto crit = crit_ideal(g).generators();
    for (const auto& p : points_of(singular_ideal(g))) CHECK(vanishes_on(crit, p.coords));
  }
}

TEST_CASE("polar ideals") {
  auto circle = problem(2, "x1", {"x1^2 + x2^2 - 1"});
  CHECK(polar_ideal(circle, 1).generators() == circle.F);
  CHECK_THROWS_AS(polar_ideal(circle, 2), std::out_of_range);
  CHECK_THROWS_AS(polar_ideal(circle, 0), std::out_of_range);

  auto plane = problem(3, "x3", {"x3"});
  REQUIRE(plane.d == 2);
  CHECK(polar_ideal(plane, 1).basis() == Ps(plane.ring, {"x3"}));
  CHECK(polar_ideal(plane, 2).basis() == Ps(plane.ring, {"x3", "x1"}));
}

TEST_CASE("polar curves") {
  auto circle = problem(2, "x1", {"x1^2 + x2^2 - 1"});
  auto c = polar_curve(circle, 1);
  CHECK(c.dim == 1);
  CHECK(c.ideal.basis() == Ps(circle.ring, {"x1^2 + x2^2 - 1"}));

  auto plane = problem(3, "x3", {"x3"});
  CHECK(polar_curve(plane, 1).is_empty());
  CHECK(vpc_ideal(plane, 1).is_unit());

  auto cusp = problem(2, "(x1+1)^2 + x2^2", {"x1^3 - x2^2"});
  CHECK(polar_curve(cusp, 1).dim <= 1);
}

TEST_CASE("finite critical points of polar curves") {
  auto circle = problem(2, "x1", {"x1^2 + x2^2 - 1"});
  auto pts = points_of(vpc_ideal(circle, 1));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].coords[1].contains(Rational(0)));
  CHECK((pts[0].coords[0].contains(Rational(-1)) || pts[0].coords[0].contains(Rational(1))));

  auto cusp = problem(2, "(x1+1)^2 + x2^2", {"x1^3 - x2^2"});
  auto v = vpc_ideal(cusp, 1);
  CHECK(is_zero_dimensional(v));
  bool origin = false;
  for (const auto& p : points_of(v)) origin = origin || (p.coords[0].contains(Rational(0)) && p.coords[1].contains(Rational(0)));
  CHECK(origin);
}

TEST_CASE("set of non-properness") {
  auto nonreached = problem(3, "(x1*x2 - 1)^2 + x2^2 + x3^2 + 42", {"x3"});
  UPoly p_np = UPoly::constant(Rational(1));
  for (int i = 1; i <= nonreached.d; ++i) p_np = p_np * set_of_non_properness(nonreached, polar_curve(nonreached, i));
  CHECK(p_np(Rational(42)) == 0);

  auto line = problem(2, "x1", {"x2"});
  CHECK(set_of_non_properness(line, polar_curve(line, 1)) == UPoly::constant(Rational(1)));

  CurveWithFibration empty;
  CHECK(set_of_non_properness(line, empty) == UPoly::constant(Rational(1)));

  // A hyperbola branch escapes with f = x2 tending to 0.
  auto hyperbola = problem(2, "x2", {"x1*x2 - 1"});
  UPoly h = set_of_non_properness(hyperbola, polar_curve(hyperbola, 1));
  CHECK(h(Rational(0)) == 0);
}

TEST_CASE("sample points") {
  std::mt19937_64 rng(4);
  auto r = make_ring(2);
  auto circle = real_sample_points(r, Ps(r, {"x1^2 + x2^2 - 1"}), 1, rng);
  CHECK(real_points(circle, Rational(1, 64)).size() >= 1);

  auto imaginary = real_sample_points(r, Ps(r, {"x1^2 + x2^2 + 1"}), 1, rng);
  CHECK(real_points(imaginary, Rational(1, 64)).empty());

  auto two = real_sample_points(r, Ps(r, {"(x1^2 + x2^2 - 1)*(x1 - 3)"}), 1, rng);
  auto pts = real_points(two, Rational(1, 64));
  bool on_circle = false, on_line = false;
  for (const auto& p : pts) {
    on_circle = on_circle || (p.coords[0].hi <= Rational(3, 2) && p.coords[0].lo >= Rational(-3, 2));
    on_line = on_line || p.coords[0].contains(Rational(3));
  }
  CHECK(on_circle);
  CHECK(on_line);
}

TEST_CASE("real emptiness") {
  std::mt19937_64 rng(6);
  auto r = make_ring(2);
  CHECK(is_empty(r, Ps(r, {"x1^2 + x2^2 + 1"}), rng));
  CHECK_FALSE(is_empty(r, Ps(r, {"x1^2 + x2^2 - 1"}), rng));
  CHECK(is_empty(r, Ps(r, {"x1^2 + x2^2 - 1", "x1 - 3"}), rng));
  CHECK(is_empty(r, Ps(r, {"x1", "x1 - 1"}), rng));
  CHECK_FALSE(is_empty(r, Ps(r, {"x1 - 1"}), rng));
}
