#include "polyopt/geometry.hpp"

#include <algorithm>

namespace polyopt {

namespace {

std::vector<MPoly> with_f(const ProblemGeometry& g) {
  std::vector<MPoly> rows{g.f};
  rows.insert(rows.end(), g.F.begin(), g.F.end());
  return rows;
}

std::vector<MPoly> minors_or_empty(const PolyMatrix& m, std::size_t r) {
  if (m.empty() || r > m.size() || r > m[0].size()) return {};
  return minors(m, r);
}

// Generators reduced modulo `ideal`, zeros dropped, duplicates (up to scaling) removed.
std::vector<MPoly> reduced_generators(const std::vector<MPoly>& gens, const Ideal& ideal) {
  const auto order = MonomialOrder::grevlex(ideal.nvars());
  NormalFormer nf(ideal.basis(order), order);
  std::vector<MPoly> out;
  for (const auto& g : gens) {
    MPoly r = nf(g);
    if (r.is_zero()) continue;
    r = r.primitive(order);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

std::string fresh_name(const Ring& ring, std::string base) {
  while (ring.index_of(base) >= 0) base += "_";
  return base;
}

Rational random_dyadic(std::mt19937_64& rng) { return Rational(static_cast<long>(rng() % 33) - 16) / 8; }

}  // namespace

ProblemGeometry ProblemGeometry::make(const MPoly& f, const std::vector<MPoly>& F) {
  ProblemGeometry g;
  g.ring = f.ring();
  for (const auto& p : F)
    if (!same_ring(p.ring(), g.ring)) throw std::invalid_argument("objective and constraints use different rings");
  g.f = f;
  g.F = F;
  g.n = g.ring->size();
  g.d = dimension(Ideal(g.ring, F));
  g.D = std::max(1, f.total_degree());
  for (const auto& p : F) g.D = std::max(g.D, p.total_degree());
  return g;
}

Ideal singular_ideal(const ProblemGeometry& g) {
  if (g.F.empty()) return Ideal::unit(g.ring);
  std::vector<MPoly> gens = g.F;
  if (g.d >= 0) {
    auto m = minors_or_empty(truncated_jacobian(g.F, 1), g.n - static_cast<std::size_t>(g.d));
    gens.insert(gens.end(), m.begin(), m.end());
  }
  return Ideal(g.ring, std::move(gens));
}

std::vector<MPoly> crit_minors(const ProblemGeometry& g) {
  if (g.d < 0) return {};
  return minors_or_empty(truncated_jacobian(with_f(g), 1), g.n - static_cast<std::size_t>(g.d) + 1);
}

Ideal crit_ideal(const ProblemGeometry& g) {
  std::vector<MPoly> gens = g.F;
  auto m = crit_minors(g);
  gens.insert(gens.end(), m.begin(), m.end());
  return Ideal(g.ring, std::move(gens));
}

Ideal polar_ideal(const ProblemGeometry& g, int i) {
  if (i < 1 || i > g.d) throw std::out_of_range("polar_ideal: level out of range");
  std::vector<MPoly> gens = g.F;
  if (i <= g.d - 1) {
    auto m = minors_or_empty(truncated_jacobian(with_f(g), static_cast<std::size_t>(i) + 1),
                             g.n - static_cast<std::size_t>(g.d) + 1);
    gens.insert(gens.end(), m.begin(), m.end());
  }
  for (int k = 0; k < i - 1; ++k) gens.push_back(MPoly::variable(g.ring, static_cast<std::size_t>(k)));
  return Ideal(g.ring, std::move(gens));
}

CurveWithFibration polar_curve(const ProblemGeometry& g, int i) {
  CurveWithFibration c;
  c.level = i;
  Ideal w = polar_ideal(g, i);
  if (w.is_unit()) {
    c.ideal = Ideal::unit(g.ring);
    return c;
  }
  // V(w) ⊆ V(F), so removing Crit only needs the minors.
  auto m = reduced_generators(crit_minors(g), w);
  if (m.empty()) {
    c.ideal = Ideal::unit(g.ring);
    return c;
  }
  c.ideal = saturate_ideal(w, Ideal(g.ring, m));
  c.dim = dimension(c.ideal);
  if (c.dim > 1)
    throw GenericityFailure("polar curve at level " + std::to_string(i) + " has dimension " + std::to_string(c.dim));
  return c;
}

Ideal vpc_ideal(const ProblemGeometry& g, const CurveWithFibration& curve) {
  if (curve.is_empty()) return Ideal::unit(g.ring);
  Ideal v = curve.ideal.plus(crit_minors(g));
  if (dimension(v) > 0)
    throw GenericityFailure("critical points of the polar curve at level " + std::to_string(curve.level) +
                            " are not finite");
  return v;
}

Ideal vpc_ideal(const ProblemGeometry& g, int i) { return vpc_ideal(g, polar_curve(g, i)); }

namespace {

// Leading coefficient in X_k of the generators of J ∩ Q[X_k, T], one
// elimination per coordinate.
UPoly non_properness_by_elimination(const ProblemGeometry& g, const CurveWithFibration& curve) {
  RingPtr big = extend_ring(g.ring, {fresh_name(*g.ring, "T")});
  const std::size_t t = g.n;
  std::vector<MPoly> gens;
  for (const auto& h : curve.ideal.generators()) gens.push_back(h.in_ring(big));
  gens.push_back(g.f.in_ring(big) - MPoly::variable(big, t));
  Ideal j(big, std::move(gens));

  // Where X_k escapes to infinity along the curve while f tends to t0, every
  // element of J ∩ Q[X_k, T] of positive X_k-degree has its leading
  // coefficient vanishing at t0; elements of Q[T] vanish on all of f(curve).
  UPoly product = UPoly::constant(Rational(1));
  for (std::size_t k = 0; k < g.n; ++k) {
    std::vector<std::size_t> drop;
    for (std::size_t v = 0; v < g.n; ++v)
      if (v != k) drop.push_back(v);
    Ideal e = elimination_ideal(j, drop);
    if (e.generators().empty()) throw std::logic_error("set_of_non_properness: curve image is not a curve");
    UPoly acc;
    for (const auto& h : e.generators()) {
      UPoly lc = h.degree_in(k) == 0 ? h.to_upoly(t) : h.coefficients_in(k).back().to_upoly(t);
      acc = gcd(acc, lc);
      if (acc.degree() == 0) break;
    }
    product = product * acc;
  }
  return product;
}

// The curve is finite over X_v, so points escape to infinity only with X_v.
// chi(X_v, T), the characteristic polynomial of f over Q[X_v], is monic in T;
// its coefficients are interpolated from the fibers X_v = a, and the finite
// limits of f as X_v grows are the roots of its leading coefficient in X_v.
UPoly non_properness_by_fibers(const ProblemGeometry& g, const CurveWithFibration& curve, std::size_t v) {
  const MPoly xv = MPoly::variable(g.ring, v);
  std::vector<Rational> xs;
  std::vector<std::vector<Rational>> newton;  // newton[j]: Newton coefficients of c_j
  int degree = -1;
  int zero_run = 0;
  const int kMaxPoints = 600;
  for (int step = 0; step < kMaxPoints && zero_run < 4; ++step) {
    const Rational a = step % 2 ? Rational((step + 1) / 2) : Rational(-(step / 2));
    UPoly chi = characteristic_polynomial(g.f, curve.ideal.plus({xv - MPoly::constant(g.ring, a)}));
    if (chi.degree() < degree) continue;  // special fiber
    if (chi.degree() > degree) {
      degree = chi.degree();
      xs.clear();
      newton.assign(static_cast<std::size_t>(degree), {});
      zero_run = 0;
    }
    Rational denom = 1;
    for (const auto& x : xs) denom *= a - x;
    bool all_zero = true;
    for (std::size_t j = 0; j < newton.size(); ++j) {
      const auto& c = newton[j];
      Rational value = 0;
      for (std::size_t k = c.size(); k-- > 0;) value = value * (a - xs[k]) + c[k];
      Rational next = (chi.coeff(j) - value) / denom;
      if (next != 0) all_zero = false;
      newton[j].push_back(next);
    }
    xs.push_back(a);
    zero_run = all_zero && xs.size() > 1 ? zero_run + 1 : 0;
  }
  if (zero_run < 4) throw GenericityFailure("non-properness interpolation did not stabilize");
  if (degree <= 0) return UPoly::constant(Rational(1));

  std::vector<UPoly> coeffs;
  int top = 0;
  for (const auto& c : newton) {
    UPoly poly;
    for (std::size_t k = c.size(); k-- > 0;)
      poly = poly * (UPoly::variable() - UPoly::constant(xs[k])) + UPoly::constant(c[k]);
    top = std::max(top, poly.degree());
    coeffs.push_back(std::move(poly));
  }
  std::vector<Rational> lead(static_cast<std::size_t>(degree) + 1, Rational(0));
  for (std::size_t j = 0; j < coeffs.size(); ++j) lead[j] = coeffs[j].coeff(static_cast<std::size_t>(top));
  if (top == 0) lead[static_cast<std::size_t>(degree)] = 1;
  return UPoly(std::move(lead));
}

}  // namespace

UPoly set_of_non_properness(const ProblemGeometry& g, const CurveWithFibration& curve) {
  const UPoly one = UPoly::constant(Rational(1));
  if (curve.dim < 1) return one;
  const std::size_t v = static_cast<std::size_t>(std::max(curve.level, 1) - 1);
  UPoly product = is_noether_position(curve.ideal, {v}) ? non_properness_by_fibers(g, curve, v)
                                                         : non_properness_by_elimination(g, curve);
  if (product.degree() < 1) return one;
  return squarefree_part(product).normalized();
}

RationalParametrization real_sample_points(const RingPtr& ring, const std::vector<MPoly>& F, int d,
                                           std::mt19937_64& rng, int max_attempts) {
  const std::size_t n = ring->size();
  if (d < 0) {
    RationalParametrization empty;
    empty.q_coords.assign(n, UPoly());
    empty.separating.assign(n, Rational(0));
    return empty;
  }
  if (d == 0) return rur(Ideal(ring, F), rng);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    MPoly dist(ring);
    for (std::size_t i = 0; i < n; ++i) {
      MPoly diff = MPoly::variable(ring, i) - MPoly::constant(ring, random_dyadic(rng));
      dist += diff * diff;
    }
    std::vector<MPoly> rows{dist};
    rows.insert(rows.end(), F.begin(), F.end());
    std::vector<MPoly> gens = F;
    auto m = minors_or_empty(truncated_jacobian(rows, 1), n - static_cast<std::size_t>(d) + 1);
    gens.insert(gens.end(), m.begin(), m.end());
    Ideal crit(ring, std::move(gens));
    if (dimension(crit) <= 0) return rur(crit, rng);
  }
  throw SampleFailure("distance-critical system stayed positive-dimensional after " + std::to_string(max_attempts) +
                      " centers");
}

bool is_empty(const RingPtr& ring, const std::vector<MPoly>& gens, std::mt19937_64& rng) {
  Ideal ideal(ring, gens);
  const int k = dimension(ideal);
  if (k < 0) return true;
  RationalParametrization p = k == 0 ? rur(ideal, rng) : real_sample_points(ring, ideal.generators(), k, rng);
  return p.is_empty() || real_root_count(p.q) == 0;
}

}  // namespace polyopt
