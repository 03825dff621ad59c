#include <random>

#include "doctest.h"
#include "polyopt/parse.hpp"
#include "polyopt/zerodim.hpp"

using namespace polyopt;

namespace {

std::vector<MPoly> Ps(const RingPtr& r, std::initializer_list<const char*> ss) {
  std::vector<MPoly> out;
  for (auto s : ss) out.push_back(parse_polynomial(s, r));
  return out;
}

UPoly T() { return UPoly::variable(); }
UPoly C(long c) { return UPoly::constant(Rational(c)); }

bool roundtrip(const RationalParametrization& p, const std::vector<MPoly>& gens) {
  for (const auto& g : gens)
    if (!substitute_parametrization(g, p).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("staircase and quotient dimension") {
  auto r = make_ring({"x", "y"});
  CHECK(quotient_dimension(Ideal(r, Ps(r, {"x^2-2", "y^2-2"}))) == 4);
  CHECK(quotient_dimension(Ideal(r, Ps(r, {"x^2", "y-x"}))) == 2);
  CHECK(quotient_dimension(Ideal::unit(r)) == 0);
  CHECK_THROWS(quotient_dimension(Ideal(r, Ps(r, {"x^2+y^2-1"}))));
}

TEST_CASE("zero-dimensional radical") {
  auto r1 = make_ring(1);
  auto rad = zero_dim_radical(Ideal(r1, Ps(r1, {"x1^2"})));
  CHECK(rad.basis() == Ps(r1, {"x1"}));
  CHECK(zero_dim_radical(Ideal(r1, Ps(r1, {"x1^2-2"}))).basis() == Ps(r1, {"x1^2-2"}));
  auto r = make_ring({"x", "y"});
  CHECK(zero_dim_radical(Ideal(r, Ps(r, {"x^2", "y-x"}))).basis() == Ps(r, {"y", "x"}));
  CHECK_THROWS_AS(zero_dim_radical(Ideal(r, Ps(r, {"x*y"}))), std::invalid_argument);
  CHECK(quotient_dimension(zero_dim_radical(Ideal(r, Ps(r, {"(x-1)^3", "(y+x)^2*(y-2)"})))) == 2);
}

TEST_CASE("rational univariate representation") {
  std::mt19937_64 rng(1);
  auto r = make_ring({"x", "y"});
  auto gens = Ps(r, {"x^2-2", "y-x"});
  auto p = rur(Ideal(r, gens), rng);
  CHECK(p.q == T() * T() - C(2));
  CHECK(p.q_coords[0] == T());
  CHECK(p.q_coords[1] == T());
  CHECK(p.separating == std::vector<Rational>{1, 0});
  CHECK(roundtrip(p, gens));

  auto pt = rur(Ideal(r, Ps(r, {"x-1", "y-2"})), rng);
  CHECK(pt.degree() == 1);
  auto pts = real_points(pt, Rational(1, 1024));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].coords[0].contains(Rational(1)));
  CHECK(pts[0].coords[1].contains(Rational(2)));

  // Four points (±√2, ±√2): x alone cannot separate them.
  auto four_gens = Ps(r, {"x^2-2", "y^2-2"});
  auto four = rur(Ideal(r, four_gens), rng);
  CHECK(four.degree() == 4);
  CHECK(four.separating[1] != 0);
  CHECK(roundtrip(four, four_gens));
  auto four_pts = real_points(four, Rational(1, 1 << 20));
  REQUIRE(four_pts.size() == 4);
  int signs[2][2] = {{0, 0}, {0, 0}};
  for (const auto& q : four_pts) {
    for (const auto& c : q.coords) {
      CHECK(c.lo * c.lo <= 2 + Rational(1, 1000));
      CHECK(c.hi * c.hi >= 2 - Rational(1, 1000));
    }
    signs[q.coords[0].lo > 0][q.coords[1].lo > 0]++;
  }
  CHECK(signs[0][0] == 1);
  CHECK(signs[0][1] == 1);
  CHECK(signs[1][0] == 1);
  CHECK(signs[1][1] == 1);

  auto empty = rur(Ideal::unit(r), rng);
  CHECK(empty.is_empty());
  CHECK(real_points(empty, Rational(1)).empty());
}

TEST_CASE("rur degree equals the number of distinct points") {
  std::mt19937_64 rng(5);
  auto r = make_ring(3);
  for (int t = 0; t < 10; ++t) {
    // Products of distinct linear factors in each variable: a grid of points.
    std::vector<MPoly> gens;
    std::size_t expected = 1;
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t k = 1 + rng() % 2;
      MPoly g = MPoly::constant(r, 1);
      std::vector<long> used;
      while (used.size() < k) {
        long a = static_cast<long>(rng() % 7) - 3;
        if (std::find(used.begin(), used.end(), a) != used.end()) continue;
        used.push_back(a);
        g = g * pow(MPoly::variable(r, i) - MPoly::constant(r, a), 1 + static_cast<unsigned>(rng() % 2));
      }
      expected *= k;
      gens.push_back(g);
    }
    auto p = rur(Ideal(r, gens), rng);
    CHECK(p.degree() == expected);
    CHECK(roundtrip(p, gens));
    CHECK(real_points(p, Rational(1, 16)).size() == expected);
  }
}

TEST_CASE("image annihilator") {
  std::mt19937_64 rng(2);
  auto r1 = make_ring(1);
  auto p1 = rur(Ideal(r1, Ps(r1, {"x1^2-2"})), rng);
  CHECK(image_annihilator(parse_polynomial("x1", r1), p1) == T() * T() - C(2));
  CHECK(image_annihilator(parse_polynomial("x1^2", r1), p1) == T() - C(2));
  auto r = make_ring({"x", "y"});
  auto p2 = rur(Ideal(r, Ps(r, {"x^2-2", "y-x"})), rng);
  CHECK(image_annihilator(parse_polynomial("x+y", r), p2) == T() * T() - C(8));
  CHECK(image_annihilator(parse_polynomial("x", r), RationalParametrization{}) == C(1));
}

TEST_CASE("image annihilator agrees with the resultant and with point values") {
  std::mt19937_64 rng(9);
  auto r = make_ring(2);
  for (int t = 0; t < 10; ++t) {
    std::vector<MPoly> gens = {parse_polynomial("x1^2 + x2^2 - 5", r),
                               parse_polynomial("x1*x2 - " + std::to_string(1 + rng() % 2), r)};
    auto p = rur(Ideal(r, gens), rng);
    MPoly f = parse_polynomial("x1^3 - " + std::to_string(rng() % 5) + "*x2 + x1*x2", r);
    UPoly ann = image_annihilator(f, p);
    CHECK(ann == image_annihilator_resultant(f, p));
    auto values = AlgebraicNumber::real_roots(ann);
    auto pts = real_points(p, pow2(-40));
    CHECK(values.size() <= pts.size());
    for (const auto& pt : pts) {
      Interval fv = f.evaluate_box(pt.coords);
      bool hit = false;
      for (const auto& v : values) hit = hit || v.interval().intersects(fv);
      CHECK(hit);
    }
  }
}

TEST_CASE("parametrization with a non-trivial denominator") {
  // q0 = u + 3 with q = u^2 - 2: x = (u - 1)/(u + 3)
  RationalParametrization p;
  p.q = T() * T() - C(2);
  p.q0 = T() + C(3);
  p.q_coords = {T() - C(1)};
  p.separating = {1};
  auto r = make_ring(1);
  MPoly f = parse_polynomial("x1^2", r);
  UPoly ann = image_annihilator(f, p);
  // x = (±√2 - 1)/(±√2 + 3), squared and checked numerically at the roots.
  for (const auto& pt : real_points(p, pow2(-30))) {
    Interval fv = f.evaluate_box(pt.coords);
    bool hit = false;
    for (const auto& v : AlgebraicNumber::real_roots(ann)) hit = hit || v.refined(pow2(-20)).interval().intersects(fv);
    CHECK(hit);
  }
  CHECK(ann.degree() == 2);
}
