#include <algorithm>
#include <random>

#include "doctest.h"
#include "polyopt/algebraic.hpp"

using namespace polyopt;

namespace {

UPoly X() { return UPoly::variable(); }
UPoly C(long c) { return UPoly::constant(Rational(c)); }

AlgebraicNumber alg(const UPoly& p, long lo, long hi) { return AlgebraicNumber(p, Interval(Rational(lo), Rational(hi))); }

// Random integer polynomial whose real roots are known: a product of distinct
// linear factors (x - r) and irreducible quadratics x^2 + c with c > 0.
struct KnownRoots {
  UPoly p;
  std::vector<long> roots;
};

KnownRoots random_known_roots(std::mt19937_64& rng) {
  KnownRoots k{C(1 + static_cast<long>(rng() % 3)), {}};
  const int linear = static_cast<int>(rng() % 6);
  while (static_cast<int>(k.roots.size()) < linear) {
    long r = static_cast<long>(rng() % 41) - 20;
    if (std::find(k.roots.begin(), k.roots.end(), r) != k.roots.end()) continue;
    k.roots.push_back(r);
    k.p = k.p * (X() - C(r));
  }
  const int quads = static_cast<int>(rng() % 2);
  for (int i = 0; i < quads && k.p.degree() <= 6; ++i) k.p = k.p * (X() * X() + C(1 + static_cast<long>(rng() % 9)));
  std::sort(k.roots.begin(), k.roots.end());
  return k;
}

UPoly random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::vector<Rational> c(static_cast<std::size_t>(1 + rng() % static_cast<unsigned>(max_degree + 1)));
  for (auto& x : c) x = static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
  if (c.back() == 0) c.back() = 1;
  return UPoly(c);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(to_decimal(Rational(1, 3), 5) == "0.33333");
  CHECK(to_decimal(Rational(-7, 4), 3) == "-1.750");
  CHECK(ceil_log2(Rational(5)) == 3);
  CHECK(ceil_log2(Rational(1, 4)) == -2);
}

TEST_CASE("upoly gcd") {
  CHECK(gcd(X() * X() - C(1), X() - C(1)) == X() - C(1));
  CHECK(gcd(X() * X() + C(1), X() * X() - C(1)) == C(1));
  CHECK(gcd(UPoly(), C(3) * pow(X(), 3)) == pow(X(), 3));
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(pow(X() - C(1), 2)) == X() - C(1));
  CHECK(squarefree_part(C(2) * (X() * X() - C(2))) == X() * X() - C(2));
  CHECK(squarefree_part(pow(X(), 3) * (X() + C(1))) == X() * (X() + C(1)));
  CHECK_THROWS_AS(squarefree_part(UPoly()), std::invalid_argument);
}

TEST_CASE("division identity on random polynomials") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    UPoly a = random_poly(rng, 7, 9), b = random_poly(rng, 4, 9);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("real root isolation") {
  CHECK(real_root_isolation(X() * X() + C(1)).empty());
  auto two = real_root_isolation(X() * X() - C(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0].hi <= 0);
  CHECK(two[1].lo >= 0);
  for (const auto& iv : two) CHECK(sturm_count(sturm_sequence(X() * X() - C(2)), iv.lo, iv.hi) == 1);
  auto three = real_root_isolation((X() - C(1)) * (X() - C(2)) * (X() - C(3)));
  REQUIRE(three.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(three[static_cast<std::size_t>(k)].contains(Rational(k + 1)));
  CHECK(three[0].hi < three[1].lo);
  CHECK(three[1].hi < three[2].lo);
  CHECK_THROWS(real_root_isolation(UPoly()));
}

TEST_CASE("isolation against known roots") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto k = random_known_roots(rng);
    auto ivs = real_root_isolation(k.p);
    REQUIRE(ivs.size() == k.roots.size());
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      CHECK(ivs[i].contains(Rational(k.roots[i])));
      if (i) CHECK(ivs[i - 1].hi < ivs[i].lo);
    }
  }
}

TEST_CASE("refinement") {
  auto r2 = alg(X() * X() - C(2), 1, 2);
  auto fine = r2.refined(Rational(1, 8));
  CHECK(fine.interval().width() <= Rational(1, 8));
  CHECK(r2.interval().contains(fine.interval()));
  CHECK(fine.interval().lo * fine.interval().lo <= 2);
  CHECK(fine.interval().hi * fine.interval().hi >= 2);

  auto three = alg(X() - C(3), 2, 4).refined(Rational(1, 100));
  CHECK(three.interval().contains(Rational(3)));

  // sqrt(2) = 1.41421356..., checked by squaring the decimal bounds
  auto finer = r2.refined(Rational(1, 1024));
  CHECK(finer.interval().width() <= Rational(1, 1024));
  CHECK(abs(finer.interval().midpoint() - Rational(141421, 100000)) < Rational(1, 1000));
  CHECK(r2.decimal(10) == "1.4142135623");
}

TEST_CASE("algebraic comparison") {
  CHECK(alg_compare(alg(X() * X() - C(2), 1, 2), alg(X() * X() - C(3), 1, 2)) == Ordering::Less);
  CHECK(alg_compare(alg(X() * X() - C(2), 1, 2), alg(pow(X(), 4) - C(4), 1, 2)) == Ordering::Equal);
  CHECK(alg_compare(alg(X() - C(5), 4, 6), alg(X() * X() - C(2), 1, 2)) == Ordering::Greater);
  auto r2 = alg(X() * X() - C(2), 1, 2);
  CHECK(alg_compare(r2, r2) == Ordering::Equal);
  CHECK_THROWS_AS(AlgebraicNumber(X() * X() - C(2), Interval(Rational(-2), Rational(2))), std::invalid_argument);
}

TEST_CASE("comparison is a total order on random triples") {
  std::mt19937_64 rng(3);
  std::vector<AlgebraicNumber> pool;
  while (pool.size() < 60) {
    UPoly p = random_poly(rng, 4, 6);
    if (p.degree() < 1) continue;
    for (auto& a : AlgebraicNumber::real_roots(p)) pool.push_back(a);
  }
  auto flip = [](Ordering o) { return o == Ordering::Less ? Ordering::Greater : o == Ordering::Greater ? Ordering::Less : o; };
  for (int t = 0; t < 100; ++t) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const auto& c = pool[rng() % pool.size()];
    CHECK(alg_compare(a, b) == flip(alg_compare(b, a)));
    if (alg_compare(a, b) != Ordering::Greater && alg_compare(b, c) != Ordering::Greater)
      CHECK(alg_compare(a, c) != Ordering::Greater);
    CHECK(alg_compare(a.refined(Rational(1, 1 << 20)), c) == alg_compare(a, c));
  }
}

TEST_CASE("sign at an algebraic number") {
  auto r2 = alg(X() * X() - C(2), 1, 2);
  CHECK(sign_at(X(), r2) == 1);
  CHECK(sign_at(X() * X() - C(2), r2) == 0);
  CHECK(sign_at(X() - C(2), r2) == -1);
  CHECK(sign_at(X() * X() * X() - C(2) * X(), r2) == 0);
  CHECK(sign_at(UPoly(), r2) == 0);
}

TEST_CASE("sign agrees with fine interval evaluation") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    UPoly a = random_poly(rng, 4, 5);
    if (a.degree() < 1) continue;
    UPoly p = random_poly(rng, 4, 5);
    for (auto& r : AlgebraicNumber::real_roots(a)) {
      Interval v = evaluate(p, r.refined(pow2(-64)).interval());
      int s = v.strict_sign();
      if (s != 0) CHECK(sign_at(p, r) == s);
    }
  }
}

TEST_CASE("bivariate resultant") {
  // Coefficients in T, indexed by the power of u.
  const UPoly T = X();
  CHECK(bivariate_resultant({C(-2), C(0), C(1)}, {T, C(-1)}).normalized() == (T * T - C(2)).normalized());
  CHECK(bivariate_resultant({C(-1), C(1)}, {T, C(0), C(-1)}).normalized() == (T - C(1)).normalized());
  CHECK(bivariate_resultant({C(1), C(0), C(1)}, {T, C(-1)}).normalized() == (T * T + C(1)).normalized());
}

TEST_CASE("rational between and below") {
  std::mt19937_64 rng(1);
  auto zero = AlgebraicNumber::from_rational(Rational(0));
  auto one = AlgebraicNumber::from_rational(Rational(1));
  Rational r = rational_between(zero, one, rng);
  CHECK(r > 0);
  CHECK(r < 1);

  auto r2 = alg(X() * X() - C(2), 1, 2);
  auto r3 = alg(X() * X() - C(3), 1, 2);
  for (int t = 0; t < 20; ++t) {
    Rational m = rational_between(r2, r3, rng);
    CHECK(m > 0);
    CHECK(m * m > 2);
    CHECK(m * m < 3);
    Rational b = rational_below(r2, rng);
    CHECK((b < 0 || b * b < 2));
    Rational a = rational_above(r2, rng);
    CHECK(a * a > 2);
  }
  CHECK_THROWS_AS(rational_between(r3, r2, rng), std::invalid_argument);
  CHECK_THROWS_AS(rational_between(r2, r2, rng), std::invalid_argument);
}
