#include "polyopt/zerodim.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace polyopt {

namespace {

using Vec = std::vector<Rational>;
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Krylov computations are done modulo word-size primes, lifted by CRT and
// rational reconstruction, then checked exactly over Q.
using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a, p))
    if (e & 1) r = mul_mod(r, a, p);
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 mpz_mod_u64(const mpz_class& z, u64 p) {
  mpz_class r = z % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

mpz_class to_mpz(u64 x) { return mpz_class(std::to_string(x)); }

// Fails when p divides the denominator.
bool reduce_mod(const Rational& r, u64 p, u64& out) {
  const u64 den = mpz_mod_u64(r.get_den(), p);
  if (den == 0) return false;
  out = mul_mod(mpz_mod_u64(r.get_num(), p), inv_mod(den, p), p);
  return true;
}

class PrimeStream {
 public:
  u64 next() {
    mpz_nextprime(cur_.get_mpz_t(), cur_.get_mpz_t());
    return std::stoull(cur_.get_str());
  }

 private:
  mpz_class cur_ = mpz_class(1) << 62;
};

using ModVec = std::vector<u64>;
using ModSparse = std::vector<std::pair<std::size_t, u64>>;

struct ModKrylov {
  std::size_t degree = 0;
  ModVec relation;             // monic, length degree + 1
  std::vector<ModVec> coords;  // only when the Krylov space is the whole space
};

// Krylov sequence of v0 under cols modulo p; echelon rows carry the
// combination of Krylov vectors they came from.
ModKrylov mod_krylov(const std::vector<ModSparse>& cols, const ModVec& v0, const std::vector<ModVec>& targets, u64 p) {
  const std::size_t dim = v0.size();
  struct Row {
    ModVec w, c;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  auto reduce = [&](ModVec w, ModVec& combo) {
    combo.assign(rows.size() + 1, 0);
    for (const auto& row : rows) {
      const u64 x = w[row.pivot];
      if (x == 0) continue;
      for (std::size_t k = row.pivot; k < dim; ++k)
        if (row.w[k]) w[k] = (w[k] + p - mul_mod(x, row.w[k], p)) % p;
      for (std::size_t k = 0; k < row.c.size(); ++k)
        if (row.c[k]) combo[k] = (combo[k] + mul_mod(x, row.c[k], p)) % p;
    }
    return w;
  };
  ModKrylov out;
  ModVec v = v0;
  while (true) {
    ModVec combo;
    ModVec w = reduce(v, combo);
    const std::size_t k = rows.size();
    ModVec c(k + 1, 0);
    for (std::size_t j = 0; j < k; ++j) c[j] = (p - combo[j]) % p;
    c[k] = 1;
    std::size_t pivot = 0;
    while (pivot < dim && w[pivot] == 0) ++pivot;
    if (pivot == dim) {
      out.degree = k;
      out.relation = std::move(c);
      break;
    }
    const u64 inv = inv_mod(w[pivot], p);
    for (auto& x : w) x = mul_mod(x, inv, p);
    for (auto& x : c) x = mul_mod(x, inv, p);
    Row row{std::move(w), std::move(c), pivot};
    rows.insert(std::upper_bound(rows.begin(), rows.end(), pivot, [](std::size_t a, const Row& r) { return a < r.pivot; }),
                std::move(row));
    ModVec next(dim, 0);
    for (std::size_t j = 0; j < dim; ++j) {
      if (v[j] == 0) continue;
      for (const auto& [i, a] : cols[j]) next[i] = (next[i] + mul_mod(v[j], a, p)) % p;
    }
    v = std::move(next);
  }
  if (out.degree == dim) {
    for (const auto& t : targets) {
      ModVec combo;
      reduce(t, combo);
      combo.resize(out.degree);
      out.coords.push_back(std::move(combo));
    }
  }
  return out;
}

bool rational_reconstruct(const mpz_class& u, const mpz_class& m, Rational& out) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = u, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (abs(t1) > bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = Rational(r1) / Rational(t1);
  return true;
}

struct KrylovResult {
  UPoly minpoly;            // monic minimal polynomial of v0
  std::vector<Vec> coords;  // targets in the Krylov basis, when it spans
};

bool reduce_columns(const std::vector<SparseVec>& cols, u64 p, std::vector<ModSparse>& out) {
  out.assign(cols.size(), {});
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, a] : cols[j]) {
      u64 x;
      if (!reduce_mod(a, p, x)) return false;
      if (x) out[j].emplace_back(i, x);
    }
  return true;
}

bool reduce_vector(const Vec& v, u64 p, ModVec& out) {
  out.assign(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!reduce_mod(v[i], p, out[i])) return false;
  return true;
}

// Degree of the minimal polynomial of v0 modulo one prime, and whether that
// polynomial is squarefree there. Both are lower bounds for the same
// properties over Q.
std::pair<std::size_t, bool> krylov_degree_mod_p(const std::vector<SparseVec>& cols, const Vec& v0) {
  PrimeStream primes;
  while (true) {
    const u64 p = primes.next();
    std::vector<ModSparse> mc;
    ModVec mv;
    if (!reduce_columns(cols, p, mc) || !reduce_vector(v0, p, mv)) continue;
    ModKrylov k = mod_krylov(mc, mv, {}, p);
    // Squarefree test: gcd(q, q') mod p.
    auto trim = [](ModVec& a) {
      while (!a.empty() && a.back() == 0) a.pop_back();
    };
    ModVec a = k.relation, b(k.relation.size() > 1 ? k.relation.size() - 1 : 0);
    for (std::size_t i = 1; i < a.size(); ++i) b[i - 1] = mul_mod(a[i], i % p, p);
    trim(a);
    trim(b);
    while (!b.empty()) {
      const u64 inv = inv_mod(b.back(), p);
      while (a.size() >= b.size()) {
        const u64 f = mul_mod(a.back(), inv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + p - mul_mod(f, b[i], p)) % p;
        trim(a);
        if (a.empty()) break;
      }
      std::swap(a, b);
    }
    return {k.degree, a.size() == 1};
  }
}

KrylovResult krylov_exact(const std::vector<SparseVec>& cols, const Vec& v0, const std::vector<Vec>& targets) {
  const std::size_t dim = v0.size();
  PrimeStream primes;
  std::size_t degree = 0;
  std::vector<mpz_class> acc;
  mpz_class modulus = 1;
  std::vector<Rational> previous;
  std::vector<Vec> krylov;  // exact v0, M v0, ..., built on first verification
  auto apply = [&](const Vec& v) {
    Vec out(dim, Rational(0));
    for (std::size_t j = 0; j < dim; ++j) {
      if (v[j] == 0) continue;
      for (const auto& [k, c] : cols[j]) out[k] += v[j] * c;
    }
    return out;
  };
  for (int round = 0; round < 100000; ++round) {
    const u64 p = primes.next();
    std::vector<ModSparse> mc;
    ModVec mv;
    if (!reduce_columns(cols, p, mc) || !reduce_vector(v0, p, mv)) continue;
    std::vector<ModVec> mt(targets.size());
    bool ok = true;
    for (std::size_t t = 0; t < targets.size() && ok; ++t) ok = reduce_vector(targets[t], p, mt[t]);
    if (!ok) continue;
    ModKrylov k = mod_krylov(mc, mv, mt, p);
    if (k.degree < degree) continue;
    ModVec residues = k.relation;
    for (const auto& c : k.coords) residues.insert(residues.end(), c.begin(), c.end());
    if (k.degree > degree || residues.size() != acc.size()) {
      degree = k.degree;
      acc.clear();
      for (u64 r : residues) acc.push_back(to_mpz(r));
      modulus = to_mpz(p);
      previous.clear();
    } else {
      const mpz_class pz = to_mpz(p);
      const u64 minv = inv_mod(mpz_mod_u64(modulus, p), p);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        const u64 delta = mul_mod((residues[i] + p - mpz_mod_u64(acc[i], p)) % p, minv, p);
        acc[i] += modulus * to_mpz(delta);
      }
      modulus *= pz;
    }
    std::vector<Rational> recon(acc.size());
    bool good = true;
    for (std::size_t i = 0; i < acc.size() && good; ++i) good = rational_reconstruct(acc[i], modulus, recon[i]);
    if (!good) continue;
    const bool stable = recon == previous;
    previous = recon;
    if (!stable) continue;

    while (krylov.size() <= degree) krylov.push_back(krylov.empty() ? v0 : apply(krylov.back()));
    auto combination = [&](const Rational* a, std::size_t len) {
      Vec out(dim, Rational(0));
      for (std::size_t j = 0; j < len; ++j) {
        if (a[j] == 0) continue;
        for (std::size_t i = 0; i < dim; ++i)
          if (krylov[j][i] != 0) out[i] += a[j] * krylov[j][i];
      }
      return out;
    };
    if (!is_zero_vec(combination(recon.data(), degree + 1))) continue;
    KrylovResult res;
    res.minpoly = UPoly(Vec(recon.begin(), recon.begin() + static_cast<std::ptrdiff_t>(degree + 1)));
    bool verified = true;
    for (std::size_t t = 0; t < targets.size() && degree == dim; ++t) {
      const Rational* a = recon.data() + degree + 1 + t * degree;
      if (combination(a, degree) != targets[t]) {
        verified = false;
        break;
      }
      res.coords.emplace_back(a, a + degree);
    }
    if (verified) return res;
  }
  throw std::logic_error("krylov: modular reconstruction did not converge");
}

UPoly krylov_minpoly(const std::vector<SparseVec>& cols, const Vec& v0) { return krylov_exact(cols, v0, {}).minpoly; }

// Q[X]/I for a zero-dimensional I, with multiplication matrices stored by
// sparse columns.
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(const Ideal& ideal) : ring_(ideal.ring()), order_(MonomialOrder::grevlex(ideal.nvars())) {
    const auto& gb = ideal.basis(order_);
    basis_ = staircase(gb, order_);
    for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k].e, k);
    NormalFormer nf(gb, order_);
    const std::size_t n = ideal.nvars();
    columns_.assign(n, std::vector<SparseVec>(basis_.size()));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        Monomial m = basis_[j] * Monomial::var(i);
        auto it = index_.find(m.e);
        if (it != index_.end()) {
          columns_[i][j] = {{it->second, Rational(1)}};
        } else {
          columns_[i][j] = to_sparse(nf(MPoly::monomial(ring_, m, Rational(1))));
        }
      }
    }
  }

  std::size_t dim() const { return basis_.size(); }
  std::size_t nvars() const { return columns_.size(); }

  Vec one() const {
    Vec v(dim(), Rational(0));
    v[index_.at(Monomial().e)] = 1;
    return v;
  }

  // Multiplication by sum_i lambda_i X_i.
  std::vector<SparseVec> linear_form_columns(const std::vector<Rational>& lambda) const {
    std::vector<SparseVec> cols(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec acc(dim(), Rational(0));
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (lambda[i] == 0) continue;
        for (const auto& [k, c] : columns_[i][j]) acc[k] += lambda[i] * c;
      }
      for (std::size_t k = 0; k < dim(); ++k)
        if (acc[k] != 0) cols[j].emplace_back(k, acc[k]);
    }
    return cols;
  }

  const std::vector<SparseVec>& variable_columns(std::size_t i) const { return columns_[i]; }

  static Vec apply(const std::vector<SparseVec>& cols, const Vec& v) {
    Vec out(v.size(), Rational(0));
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      for (const auto& [k, c] : cols[j]) out[k] += v[j] * c;
    }
    return out;
  }

 private:
  SparseVec to_sparse(const MPoly& p) const {
    SparseVec out;
    for (const auto& t : p.terms()) out.emplace_back(index_.at(t.m.e), t.c);
    return out;
  }

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Monomial> basis_;
  std::map<std::array<std::uint16_t, kMaxVars>, std::size_t> index_;
  std::vector<std::vector<SparseVec>> columns_;
};

// Returns the radical together with its quotient algebra.
std::pair<Ideal, std::unique_ptr<QuotientAlgebra>> radicalize(const Ideal& ideal) {
  if (dimension(ideal) != 0) throw std::invalid_argument("zero_dim_radical: ideal is not zero-dimensional");
  auto algebra = std::make_unique<QuotientAlgebra>(ideal);
  std::vector<MPoly> extra;
  for (std::size_t i = 0; i < ideal.nvars(); ++i) {
    UPoly h = krylov_minpoly(algebra->variable_columns(i), algebra->one());
    UPoly s = squarefree_part(h);
    if (s.degree() < h.degree()) extra.push_back(MPoly::from_upoly(ideal.ring(), i, s.normalized()));
  }
  if (extra.empty()) return {ideal, std::move(algebra)};
  Ideal rad = ideal.plus(extra);
  auto rad_algebra = std::make_unique<QuotientAlgebra>(rad);
  return {rad, std::move(rad_algebra)};
}

UPoly mod_mul(const UPoly& a, const UPoly& b, const UPoly& q) { return rem(a * b, q); }

}  // namespace

std::vector<Monomial> staircase(const std::vector<MPoly>& basis, const MonomialOrder& order) {
  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(g.leading_term(order).m);
  for (const auto& m : leads)
    if (m.is_one()) return {};
  const std::size_t n = order.nvars();
  std::vector<Monomial> out;
  std::map<std::array<std::uint16_t, kMaxVars>, bool> seen;
  std::vector<Monomial> frontier{Monomial()};
  seen[Monomial().e] = true;
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    out.push_back(m);
    if (out.size() > 200000) throw std::invalid_argument("staircase: ideal is not zero-dimensional");
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = m * Monomial::var(i);
      if (seen.count(next.e)) continue;
      seen[next.e] = true;
      bool standard = true;
      for (const auto& l : leads)
        if (divides(l, next)) {
          standard = false;
          break;
        }
      if (standard) frontier.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  return out;
}

std::size_t quotient_dimension(const Ideal& ideal) {
  const int d = dimension(ideal);
  if (d < 0) return 0;
  if (d > 0) throw std::invalid_argument("quotient_dimension: ideal is not zero-dimensional");
  const auto order = MonomialOrder::grevlex(ideal.nvars());
  return staircase(ideal.basis(order), order).size();
}

Ideal zero_dim_radical(const Ideal& ideal) { return radicalize(ideal).first; }

UPoly characteristic_polynomial(const MPoly& f, const Ideal& ideal) {
  if (dimension(ideal) > 0) throw std::invalid_argument("characteristic_polynomial: ideal is not zero-dimensional");
  const auto order = MonomialOrder::grevlex(ideal.nvars());
  const auto& gb = ideal.basis(order);
  const auto basis = staircase(gb, order);
  const std::size_t n = basis.size();
  if (n == 0) return UPoly::constant(Rational(1));
  std::map<std::array<std::uint16_t, kMaxVars>, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index.emplace(basis[k].e, k);
  NormalFormer nf(gb, order);
  std::vector<Vec> h(n, Vec(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    const MPoly col = nf(f * MPoly::monomial(ideal.ring(), basis[j], Rational(1)));
    for (const auto& t : col.terms()) h[index.at(t.m.e)][j] = t.c;
  }

  // Similarity transform to upper Hessenberg form.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t p = k + 1;
    while (p < n && h[p][k] == 0) ++p;
    if (p == n) continue;
    if (p != k + 1) {
      std::swap(h[p], h[k + 1]);
      for (auto& row : h) std::swap(row[p], row[k + 1]);
    }
    for (std::size_t i = k + 2; i < n; ++i) {
      if (h[i][k] == 0) continue;
      const Rational u = h[i][k] / h[k + 1][k];
      for (std::size_t c = 0; c < n; ++c) h[i][c] -= u * h[k + 1][c];
      for (std::size_t r = 0; r < n; ++r) h[r][k + 1] += u * h[r][i];
    }
  }
  std::vector<UPoly> p(n + 1);
  p[0] = UPoly::constant(Rational(1));
  const UPoly x = UPoly::variable();
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = (x - UPoly::constant(h[m - 1][m - 1])) * p[m - 1];
    Rational t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t *= h[m - i][m - i - 1];
      if (t == 0) break;
      p[m] -= p[m - i - 1] * (t * h[m - i - 1][m - 1]);
    }
  }
  return p[n];
}

RationalParametrization rur(const Ideal& ideal, std::mt19937_64& rng, int max_attempts) {
  const std::size_t n = ideal.nvars();
  RationalParametrization out;
  out.q_coords.assign(n, UPoly());
  out.separating.assign(n, Rational(0));
  if (ideal.is_unit()) return out;
  if (dimension(ideal) != 0) throw std::invalid_argument("rur: ideal is not zero-dimensional");
  // The quotient of I itself is used while it looks reduced; a squarefree
  // minimal polynomial of full degree certifies that.
  auto algebra = std::make_unique<QuotientAlgebra>(ideal);
  bool radical = false;
  auto to_radical = [&] {
    if (radical) return;
    algebra = radicalize(ideal).second;
    radical = true;
  };

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Rational> lambda(n, Rational(0));
    if (attempt == 0) {
      lambda[0] = 1;
    } else {
      const long bound = 1L << std::min(4 + 2 * attempt, 40);
      bool nonzero = false;
      while (!nonzero) {
        for (auto& l : lambda) {
          l = static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
          nonzero = nonzero || l != 0;
        }
      }
    }
    const std::size_t D = algebra->dim();
    const Vec one = algebra->one();
    auto cols = algebra->linear_form_columns(lambda);
    auto [degree, squarefree] = krylov_degree_mod_p(cols, one);
    if (degree != D || !squarefree) {
      if (degree == D || attempt > 0) to_radical();
      continue;
    }
    std::vector<Vec> targets;
    for (std::size_t i = 0; i < n; ++i) targets.push_back(QuotientAlgebra::apply(algebra->variable_columns(i), one));
    KrylovResult k = krylov_exact(cols, one, targets);
    if (static_cast<std::size_t>(k.minpoly.degree()) != D || k.coords.size() != n) continue;
    out.q = k.minpoly.normalized();
    out.q0 = UPoly::constant(Rational(1));
    out.separating = lambda;
    for (std::size_t i = 0; i < n; ++i) out.q_coords[i] = UPoly(k.coords[i]);
    return out;
  }
  throw RurFailure("no separating linear form found after " + std::to_string(max_attempts) + " attempts");
}

UPoly substitute_parametrization(const MPoly& g, const RationalParametrization& p) {
  if (g.nvars() != p.nvars()) throw std::invalid_argument("substitute_parametrization: variable count mismatch");
  if (g.is_zero()) return UPoly();
  const int deg = g.total_degree();
  const UPoly& q = p.q;
  auto reduce = [&](const UPoly& a) { return p.is_empty() ? UPoly() : rem(a, q); };
  std::vector<std::vector<UPoly>> powers(p.nvars());
  std::vector<UPoly> q0_powers{UPoly::constant(Rational(1))};
  for (int k = 1; k <= deg; ++k) q0_powers.push_back(reduce(mod_mul(q0_powers.back(), p.q0, q)));
  auto power = [&](std::size_t i, unsigned e) -> const UPoly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(UPoly::constant(Rational(1)));
    while (v.size() <= e) v.push_back(reduce(v.back() * p.q_coords[i]));
    return v[e];
  };
  UPoly acc;
  for (const auto& t : g.terms()) {
    UPoly term = UPoly::constant(t.c);
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (t.m.e[i]) term = reduce(term * power(i, t.m.e[i]));
    term = reduce(term * q0_powers[static_cast<std::size_t>(deg) - t.m.degree()]);
    acc += term;
  }
  return acc;
}

UPoly image_annihilator_resultant(const MPoly& f, const RationalParametrization& p) {
  if (p.is_empty()) return UPoly::constant(Rational(1));
  const UPoly n = substitute_parametrization(f, p);
  const UPoly q0k = pow(p.q0, static_cast<unsigned>(std::max(0, f.total_degree())));
  const int len = std::max(q0k.degree(), n.degree()) + 1;
  BivariatePoly b(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    b[uj] = UPoly({-n.coeff(uj), q0k.coeff(uj)});
  }
  BivariatePoly a;
  for (const auto& c : p.q.coefficients()) a.push_back(UPoly::constant(c));
  UPoly res = bivariate_resultant(a, b);
  if (res.is_zero()) throw std::logic_error("image_annihilator: vanishing resultant");
  return squarefree_part(res).normalized();
}

UPoly image_annihilator(const MPoly& f, const RationalParametrization& p) {
  if (p.is_empty()) return UPoly::constant(Rational(1));
  if (p.q0.degree() >= 1) return image_annihilator_resultant(f, p);
  // With q0 constant, Q[u]/q is reduced and the minimal polynomial of
  // multiplication by the value of f equals the squarefree resultant.
  const UPoly n = substitute_parametrization(f, p);
  const Rational denom = pow(p.q0, static_cast<unsigned>(std::max(0, f.total_degree()))).coeff(0);
  const UPoly value = n * (1 / denom);
  const std::size_t D = p.degree();
  std::vector<SparseVec> cols(D);
  for (std::size_t j = 0; j < D; ++j) {
    UPoly prod = rem(value * UPoly::monomial(Rational(1), j), p.q);
    for (int k = 0; k <= prod.degree(); ++k) {
      const auto uk = static_cast<std::size_t>(k);
      if (prod.coeff(uk) != 0) cols[j].emplace_back(uk, prod.coeff(uk));
    }
  }
  Vec e0(D, Rational(0));
  e0[0] = 1;
  return krylov_minpoly(cols, e0).normalized();
}

std::vector<Interval> point_box(const RationalParametrization& p, const AlgebraicNumber& root, const Rational& width) {
  AlgebraicRefiner refiner(root);
  while (true) {
    const Interval& iv = refiner.interval();
    Interval den = evaluate(p.q0, iv);
    if (den.strict_sign() != 0) {
      std::vector<Interval> box;
      bool ok = true;
      for (const auto& qi : p.q_coords) {
        Interval c = evaluate(qi, iv) / den;
        if (c.width() > width) ok = false;
        box.push_back(c);
      }
      if (ok) return box;
    }
    if (iv.is_point()) throw std::logic_error("point_box: q0 vanishes at a root of q");
    refiner.step();
  }
}

std::vector<RealPoint> real_points(const RationalParametrization& p, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("real_points: width must be positive");
  std::vector<RealPoint> out;
  if (p.is_empty()) return out;
  for (auto& root : AlgebraicNumber::real_roots(p.q)) {
    auto box = point_box(p, root, width);
    out.push_back(RealPoint{root, std::move(box)});
  }
  return out;
}

}  // namespace polyopt
