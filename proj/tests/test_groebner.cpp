#include <random>

#include "doctest.h"
#include "polyopt/groebner.hpp"
#include "polyopt/parse.hpp"

using namespace polyopt;

namespace {

MPoly P(const RingPtr& r, const char* s) { return parse_polynomial(s, r); }

std::vector<MPoly> Ps(const RingPtr& r, std::initializer_list<const char*> ss) {
  std::vector<MPoly> out;
  for (auto s : ss) out.push_back(P(r, s));
  return out;
}

MPoly random_poly(const RingPtr& ring, std::mt19937_64& rng, unsigned max_degree, int terms) {
  MPoly p(ring);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    unsigned budget = static_cast<unsigned>(rng() % (max_degree + 1));
    for (unsigned k = 0; k < budget; ++k) m.e[rng() % ring->size()]++;
    p += MPoly::monomial(ring, m, Rational(static_cast<long>(rng() % 7) - 3));
  }
  return p;
}

// S-polynomial written out directly from the definition.
MPoly spoly(const MPoly& f, const MPoly& g, const MonomialOrder& o) {
  const auto& lf = f.leading_term(o);
  const auto& lg = g.leading_term(o);
  Monomial l = lcm(lf.m, lg.m);
  return MPoly::monomial(f.ring(), quotient(l, lf.m), 1 / lf.c) * f -
         MPoly::monomial(g.ring(), quotient(l, lg.m), 1 / lg.c) * g;
}

bool all_spolys_reduce(const std::vector<MPoly>& gb, const MonomialOrder& o) {
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j)
      if (!normal_form(spoly(gb[i], gb[j], o), gb, o).is_zero()) return false;
  return true;
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
  for (const auto& g : small.generators())
    if (!big.contains(g)) return false;
  return true;
}

bool same_ideal(const Ideal& a, const Ideal& b) { return ideal_contains(a, b) && ideal_contains(b, a); }

}  // namespace

TEST_CASE("normal form") {
  auto r = make_ring({"x", "y"});
  auto o = MonomialOrder::grevlex(2);
  CHECK(normal_form(P(r, "x^2"), {P(r, "x")}, o).is_zero());
  CHECK(normal_form(P(r, "x+y"), {P(r, "x")}, o) == P(r, "y"));
  CHECK(normal_form(P(r, "y"), {P(r, "x")}, o) == P(r, "y"));
  CHECK(normal_form(P(r, "3*x*y + 1/2"), {P(r, "2*x - 1")}, o) == P(r, "3/2*y + 1/2"));
}

TEST_CASE("groebner bases") {
  auto r = make_ring({"x", "y"});
  auto lex = MonomialOrder::lex(2);
  CHECK(groebner_basis(Ps(r, {"x", "y"}), lex) == Ps(r, {"y", "x"}));
  CHECK(groebner_basis(Ps(r, {"x^2+y^2-1", "x"}), lex) == Ps(r, {"y^2-1", "x"}));
  // x = y^2 forces y^4 = y.
  CHECK(groebner_basis(Ps(r, {"x^2-y", "y^2-x"}), lex) == Ps(r, {"y^4-y", "x-y^2"}));
  CHECK(groebner_basis(Ps(r, {"x*y-1", "x"}), lex) == Ps(r, {"1"}));
  CHECK(groebner_basis({MPoly(r)}, lex).empty());
}

TEST_CASE("ideal cache and membership") {
  auto r = make_ring({"x", "y"});
  Ideal i(r, Ps(r, {"x^2+y^2-1", "x-y"}));
  const auto& b1 = i.basis();
  const auto& b2 = i.basis();
  CHECK(&b1 == &b2);
  CHECK(i.contains(P(r, "2*y^2-1")));
  CHECK_FALSE(i.contains(P(r, "y")));
  CHECK_FALSE(i.is_unit());
  CHECK(Ideal::unit(r).is_unit());
}

TEST_CASE("dimension") {
  auto r = make_ring({"x", "y"});
  CHECK(dimension(Ideal(r, Ps(r, {"x^2+y^2-1"}))) == 1);
  CHECK(dimension(Ideal(r, Ps(r, {"x", "y"}))) == 0);
  CHECK(dimension(Ideal(r, Ps(r, {"x^2+y^2+1"}))) == 1);
  CHECK(dimension(Ideal(r, Ps(r, {"1"}))) == -1);
  CHECK(dimension(Ideal(r, {})) == 2);
  CHECK(is_zero_dimensional(Ideal(r, Ps(r, {"x^2-2", "y-x"}))));
  CHECK_FALSE(is_zero_dimensional(Ideal(r, Ps(r, {"x^2+y^2-1"}))));
  CHECK(is_zero_dimensional(Ideal::unit(r)));
}

TEST_CASE("dimension of hypersurfaces and complete intersections") {
  auto r = make_ring(3);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    // Dense polynomials with a nonzero constant and pure powers are a regular
    // sequence for generic coefficients; keep the count small.
    const int s = 1 + static_cast<int>(rng() % 3);
    std::vector<MPoly> gens;
    for (int k = 0; k < s; ++k) {
      MPoly g = random_poly(r, rng, 2, 6) + MPoly::monomial(r, Monomial::var(static_cast<std::size_t>(k), 2), 1) +
                MPoly::constant(r, Rational(1 + static_cast<long>(rng() % 5)));
      gens.push_back(g);
    }
    Ideal i(r, gens);
    if (i.is_unit()) continue;
    CHECK(dimension(i) == 3 - s);
  }
}

TEST_CASE("elimination") {
  auto r = make_ring({"t", "x", "y"});
  Ideal par(r, Ps(r, {"x-t", "y-t^2"}));
  Ideal e = elimination_ideal(par, {0});
  REQUIRE(e.generators().size() == 1);
  CHECK(e.generators()[0] == P(r, "x^2-y"));
  auto r2 = make_ring({"x", "y"});
  Ideal ex = elimination_ideal(Ideal(r2, Ps(r2, {"x"})), {1});
  REQUIRE(ex.generators().size() == 1);
  CHECK(ex.generators()[0] == P(r2, "x"));
  CHECK(elimination_ideal(Ideal(r2, Ps(r2, {"1-y*x"})), {1}).generators().empty());
}

TEST_CASE("saturation") {
  auto r = make_ring({"x", "y"});
  Ideal s = saturate(Ideal(r, Ps(r, {"x*y"})), P(r, "x"));
  CHECK(same_ideal(s, Ideal(r, Ps(r, {"y"}))));
  CHECK(saturate(Ideal(r, Ps(r, {"x^2"})), P(r, "x")).is_unit());
  CHECK(same_ideal(saturate(Ideal(r, Ps(r, {"x^2+y^2-1"})), P(r, "y")), Ideal(r, Ps(r, {"x^2+y^2-1"}))));
  CHECK_THROWS_AS(saturate(Ideal(r, Ps(r, {"x"})), MPoly(r)), std::invalid_argument);

  Ideal lines(r, Ps(r, {"x*y*(x-1)"}));
  Ideal by(r, Ps(r, {"x", "y"}));
  // Removing the origin keeps all three lines.
  CHECK(same_ideal(saturate_ideal(lines, by), lines));
  Ideal cut(r, Ps(r, {"x*(x-1)"}));
  CHECK(same_ideal(saturate_ideal(cut, Ideal(r, Ps(r, {"x"}))), Ideal(r, Ps(r, {"x-1"}))));
}

TEST_CASE("intersection") {
  auto r = make_ring({"x", "y"});
  Ideal a(r, Ps(r, {"x"})), b(r, Ps(r, {"y"}));
  CHECK(same_ideal(intersect(a, b), Ideal(r, Ps(r, {"x*y"}))));
  CHECK(same_ideal(intersect(a, Ideal::unit(r)), a));
}

TEST_CASE("noether position") {
  auto r = make_ring(2);
  CHECK(noether_position_check(Ideal(r, Ps(r, {"x1^2+x2^2-1"})), 1));
  CHECK_FALSE(noether_position_check(Ideal(r, Ps(r, {"x1*x2-1"})), 1));
  CHECK(noether_position_check(Ideal(r, Ps(r, {"x2-x1^2"})), 1));
  CHECK_THROWS_AS(noether_position_check(Ideal(r, Ps(r, {"x2-x1^2"})), 0), std::invalid_argument);
  CHECK(is_noether_position(Ideal(r, Ps(r, {"x1*x2-1"})).plus({}), {1}) == false);
  auto sheared = P(r, "x1*x2-1").change_coordinates(CoordinateChange({{1, 1}, {0, 1}}));
  CHECK(noether_position_check(Ideal(r, {sheared}), 1));
}

TEST_CASE("random ideals: basis properties") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 3;
    auto r = make_ring(n);
    std::vector<MPoly> gens;
    const int s = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < s; ++k) gens.push_back(random_poly(r, rng, 3, 1 + static_cast<int>(rng() % 4)));
    const auto o = (rng() % 2) ? MonomialOrder::grevlex(n) : MonomialOrder::lex(n);
    auto gb = groebner_basis(gens, o);
    CHECK(all_spolys_reduce(gb, o));
    for (const auto& g : gens) CHECK(normal_form(g, gb, o).is_zero());
    for (const auto& g : gb) CHECK(g.leading_term(o).c == 1);

    // Another generating set of the same ideal gives the same reduced basis.
    std::vector<MPoly> regen = gens;
    if (regen.size() >= 2 && !regen[0].is_zero()) regen[1] += random_poly(r, rng, 1, 2) * regen[0];
    std::reverse(regen.begin(), regen.end());
    CHECK(groebner_basis(regen, o) == gb);
  }
}

TEST_CASE("random ideals: saturation and elimination") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 25; ++t) {
    auto r = make_ring(3);
    std::vector<MPoly> gens;
    const int s = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < s; ++k) gens.push_back(random_poly(r, rng, 3, 1 + static_cast<int>(rng() % 3)));
    Ideal i(r, gens);
    MPoly g = random_poly(r, rng, 2, 2);
    if (g.is_zero()) continue;
    Ideal sat = saturate(i, g);
    CHECK(ideal_contains(sat, i));
    CHECK(same_ideal(saturate(sat, g), sat));

    Ideal e = elimination_ideal(i, {rng() % 3});
    for (const auto& h : e.generators()) CHECK(i.contains(h));
  }
}

TEST_CASE("saturation is the unit ideal exactly when V(I) lies in V(g)") {
  auto r = make_ring(2);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    // A grid of rational points cut out by two univariate products.
    std::vector<long> xs = {static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) + 3};
    std::vector<long> ys = {static_cast<long>(rng() % 5) - 2};
    MPoly fx = MPoly::constant(r, 1), fy = MPoly::constant(r, 1);
    for (long a : xs) fx = fx * (MPoly::variable(r, 0) - MPoly::constant(r, a));
    for (long b : ys) fy = fy * (MPoly::variable(r, 1) - MPoly::constant(r, b));
    Ideal i(r, {fx, fy});
    MPoly g = random_poly(r, rng, 2, 3);
    if (rng() % 2) g = g * fx;
    if (g.is_zero()) continue;
    bool vanishes = true;
    for (long a : xs)
      for (long b : ys) vanishes = vanishes && g.evaluate({Rational(a), Rational(b)}) == 0;
    CHECK(saturate(i, g).is_unit() == vanishes);
  }
}
