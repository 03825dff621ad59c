#include "polyopt/groebner.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace polyopt {

namespace {

struct GTerm {
  Monomial m;
  Integer c;
};
using GPoly = std::vector<GTerm>;

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m.e[i]) mask |= 1u << i;
  return mask;
}

struct Reducer {
  const GPoly* poly;
  Monomial lm;
  unsigned degree;
  std::uint32_t mask;
};

class ReducerSet {
 public:
  void add(const GPoly* p) {
    const Monomial& lm = p->front().m;
    items_.push_back(Reducer{p, lm, lm.degree(), support_mask(lm)});
  }
  void clear() { items_.clear(); }
  const GPoly* find(const Monomial& m) const {
    const unsigned d = m.degree();
    const std::uint32_t mask = support_mask(m);
    for (const auto& r : items_) {
      if (r.degree <= d && (r.mask & ~mask) == 0 && divides(r.lm, m)) return r.poly;
    }
    return nullptr;
  }

 private:
  std::vector<Reducer> items_;
};

GPoly to_gpoly(const MPoly& p, const MonomialOrder& order, Rational* scale_out = nullptr) {
  GPoly g;
  if (p.is_zero()) return g;
  Integer den_lcm = 1;
  for (const auto& t : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
  g.reserve(p.terms().size());
  for (const auto& t : p.terms()) g.push_back(GTerm{t.m, t.c.get_num() * (den_lcm / t.c.get_den())});
  std::sort(g.begin(), g.end(), [&](const GTerm& a, const GTerm& b) { return order.compare(a.m, b.m) > 0; });
  if (scale_out) *scale_out = Rational(den_lcm);
  return g;
}

MPoly from_gpoly(const RingPtr& ring, const GPoly& g, const Rational& divisor = Rational(1)) {
  std::vector<MPoly::Term> terms;
  terms.reserve(g.size());
  for (const auto& t : g) terms.push_back(MPoly::Term{t.m, Rational(t.c) / divisor});
  return MPoly(ring, std::move(terms));
}

Integer content(const GPoly& p, const GPoly* other = nullptr) {
  Integer g = 0;
  auto fold = [&](const GPoly& q) {
    for (const auto& t : q) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) return;
    }
  };
  fold(p);
  if (other && g != 1) fold(*other);
  return g;
}

void divide_all(GPoly& p, const Integer& d) {
  for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), d.get_mpz_t());
}

void make_primitive(GPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (p.front().c < 0) g = -g;
  if (g != 1) divide_all(p, g);
}

// a*p[pstart..] - b*shift*g[1..], dropping the cancelled leading terms.
GPoly reduce_step(const GPoly& p, std::size_t pstart, const Integer& a, const Integer& b, const Monomial& shift,
                  const GPoly& g, const MonomialOrder& order) {
  GPoly out;
  out.reserve(p.size() - pstart + g.size());
  std::size_t i = pstart + 1, j = 1;
  Monomial gm;
  bool have_gm = false;
  while (i < p.size() || j < g.size()) {
    if (j < g.size() && !have_gm) {
      gm = g[j].m * shift;
      have_gm = true;
    }
    int c;
    if (i == p.size()) {
      c = -1;
    } else if (j == g.size()) {
      c = 1;
    } else {
      c = order.compare(p[i].m, gm);
    }
    if (c > 0) {
      out.push_back(GTerm{p[i].m, a * p[i].c});
      ++i;
    } else if (c < 0) {
      out.push_back(GTerm{gm, -b * g[j].c});
      ++j;
      have_gm = false;
    } else {
      Integer v = a * p[i].c - b * g[j].c;
      if (v != 0) out.push_back(GTerm{p[i].m, std::move(v)});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return out;
}

// Reduces p modulo the reducers. With `full`, tail terms are reduced as well.
// On return, multiplier * p_in ≡ p_out modulo the reducers.
GPoly reduce(GPoly p, const ReducerSet& reducers, const MonomialOrder& order, bool full, Rational* multiplier) {
  GPoly result;
  std::size_t start = 0;
  unsigned since_content = 0;
  while (start < p.size()) {
    const GPoly* g = reducers.find(p[start].m);
    if (!g) {
      if (!full) break;
      result.push_back(std::move(p[start]));
      ++start;
      continue;
    }
    const Integer& lp = p[start].c;
    const Integer& lg = g->front().c;
    Integer d;
    mpz_gcd(d.get_mpz_t(), lp.get_mpz_t(), lg.get_mpz_t());
    Integer a = lg / d;
    Integer b = lp / d;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    Monomial shift = quotient(p[start].m, g->front().m);
    p = reduce_step(p, start, a, b, shift, *g, order);
    start = 0;
    if (a != 1) {
      for (auto& t : result) t.c *= a;
      if (multiplier) *multiplier *= a;
    }
    if (++since_content >= 8) {
      since_content = 0;
      Integer c = content(p, &result);
      if (c > 1) {
        divide_all(p, c);
        divide_all(result, c);
        if (multiplier) *multiplier /= c;
      }
    }
  }
  if (start < p.size()) {
    result.insert(result.end(), std::make_move_iterator(p.begin() + static_cast<std::ptrdiff_t>(start)),
                  std::make_move_iterator(p.end()));
  }
  return result;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  explicit Buchberger(const MonomialOrder& order) : order_(order) {}

  // Returns false once a nonzero constant appears (unit ideal).
  bool run(std::vector<GPoly> inputs) {
    for (auto& f : inputs) {
      if (f.empty()) continue;
      make_primitive(f);
      if (f.front().m.is_one()) return false;
      insert(std::move(f), 0);
    }
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return order_.compare(a.lcm, b.lcm) < 0;
      });
      Pair pr = *it;
      *it = pairs_.back();
      pairs_.pop_back();
      ++groebner_stats().pairs;
      GPoly s = spoly(pr);
      GPoly h = reduce(std::move(s), reducers_, order_, true, nullptr);
      if (h.empty()) {
        ++groebner_stats().zero_reductions;
        continue;
      }
      make_primitive(h);
      if (h.front().m.is_one()) return false;
      insert(std::move(h), pr.sugar);
    }
    return true;
  }

  // Reduced basis, sorted by increasing leading monomial.
  std::vector<GPoly> reduced_basis() const {
    std::vector<const GPoly*> all, gens;
    for (std::size_t k : basis_) all.push_back(&polys_[k]);
    // Inputs enter unreduced, so the basis may still hold redundant leaders.
    for (std::size_t k = 0; k < all.size(); ++k) {
      const Monomial& mk = all[k]->front().m;
      bool redundant = false;
      for (std::size_t l = 0; l < all.size() && !redundant; ++l) {
        if (l == k) continue;
        const Monomial& ml = all[l]->front().m;
        redundant = divides(ml, mk) && (!(ml == mk) || l < k);
      }
      if (!redundant) gens.push_back(all[k]);
    }
    std::sort(gens.begin(), gens.end(),
              [&](const GPoly* a, const GPoly* b) { return order_.compare(a->front().m, b->front().m) < 0; });
    std::vector<GPoly> out;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      ReducerSet others;
      for (std::size_t l = 0; l < gens.size(); ++l)
        if (l != k) others.add(gens[l]);
      GPoly g = *gens[k];
      GTerm lead = g.front();
      GPoly tail(g.begin() + 1, g.end());
      Rational mult = 1;
      GPoly red = reduce(std::move(tail), others, order_, true, &mult);
      // lead * mult + red, then primitive
      GPoly full;
      full.reserve(red.size() + 1);
      Rational lc = Rational(lead.c) * mult;
      Integer scale = lc.get_den();
      full.push_back(GTerm{lead.m, lc.get_num()});
      for (auto& t : red) full.push_back(GTerm{t.m, t.c * scale});
      make_primitive(full);
      out.push_back(std::move(full));
    }
    return out;
  }

 private:
  GPoly spoly(const Pair& pr) const {
    const GPoly& f = polys_[pr.i];
    const GPoly& g = polys_[pr.j];
    Integer d;
    mpz_gcd(d.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    Integer a = g.front().c / d;  // multiplies f
    Integer b = f.front().c / d;  // multiplies g
    Monomial sf = quotient(pr.lcm, f.front().m);
    Monomial sg = quotient(pr.lcm, g.front().m);
    GPoly fs;
    fs.reserve(f.size());
    for (const auto& t : f) fs.push_back(GTerm{t.m * sf, t.c});
    return reduce_step(fs, 0, a, b, sg, g, order_);
  }

  void insert(GPoly h, unsigned sugar_hint) {
    const std::size_t hi = polys_.size();
    const Monomial hm = h.front().m;
    const unsigned hs = std::max(sugar_hint, hm.degree());
    polys_.push_back(std::move(h));
    sugar_.push_back(hs);

    // Gebauer-Moeller update.
    std::vector<Pair> cand;
    for (std::size_t k : basis_) {
      const Monomial& gm = polys_[k].front().m;
      Monomial l = lcm(hm, gm);
      unsigned s = std::max(hs + l.degree() - hm.degree(), sugar_[k] + l.degree() - gm.degree());
      cand.push_back(Pair{k, hi, l, s});
    }
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (coprime(hm, polys_[cand[a].i].front().m)) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (divides(cand[b].lcm, cand[a].lcm) && !(cand[b].lcm == cand[a].lcm && b > a)) {
          keep[a] = false;
          break;
        }
      }
    }
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      if (coprime(hm, polys_[cand[a].i].front().m)) continue;  // first criterion
      fresh.push_back(cand[a]);
    }
    // Chain criterion on old pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + fresh.size());
    for (const auto& p : pairs_) {
      if (divides(hm, p.lcm)) {
        Monomial l1 = lcm(polys_[p.i].front().m, hm);
        Monomial l2 = lcm(polys_[p.j].front().m, hm);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept.push_back(p);
    }
    kept.insert(kept.end(), fresh.begin(), fresh.end());
    pairs_ = std::move(kept);

    std::vector<std::size_t> nb;
    for (std::size_t k : basis_)
      if (!divides(hm, polys_[k].front().m)) nb.push_back(k);
    nb.push_back(hi);
    basis_ = std::move(nb);
    reducers_.clear();
    for (std::size_t k : basis_) reducers_.add(&polys_[k]);
  }

  const MonomialOrder& order_;
  std::deque<GPoly> polys_;
  std::vector<unsigned> sugar_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
  ReducerSet reducers_;
};

}  // namespace

GroebnerStats& groebner_stats() {
  thread_local GroebnerStats stats;
  return stats;
}

std::vector<MPoly> groebner_basis(const std::vector<MPoly>& generators, const MonomialOrder& order) {
  ++groebner_stats().bases;
  RingPtr ring;
  std::vector<GPoly> inputs;
  for (const auto& g : generators) {
    if (!ring && g.ring()) ring = g.ring();
    if (g.is_zero()) continue;
    if (g.nvars() > order.nvars() && order.nvars() != 0) {
      // Variables beyond the order would be compared as equal; reject.
      for (std::size_t v = order.nvars(); v < g.nvars(); ++v)
        if (g.uses_var(v)) throw std::invalid_argument("monomial order does not cover all variables");
    }
    inputs.push_back(to_gpoly(g, order));
  }
  if (inputs.empty()) return {};
  Buchberger bb(order);
  if (!bb.run(std::move(inputs))) return {MPoly::constant(ring, Rational(1))};
  std::vector<MPoly> out;
  for (const auto& g : bb.reduced_basis()) out.push_back(from_gpoly(ring, g).monic(order));
  return out;
}

struct NormalFormer::Impl {
  MonomialOrder order;
  std::vector<GPoly> basis;
  ReducerSet reducers;
};

NormalFormer::NormalFormer(const std::vector<MPoly>& basis, const MonomialOrder& order) {
  auto impl = std::make_shared<Impl>();
  impl->order = order;
  impl->basis.reserve(basis.size());
  for (const auto& b : basis) {
    if (b.is_zero()) throw std::invalid_argument("normal_form: zero basis element");
    impl->basis.push_back(to_gpoly(b, order));
  }
  for (const auto& g : impl->basis) impl->reducers.add(&g);
  impl_ = std::move(impl);
}

MPoly NormalFormer::operator()(const MPoly& p) const {
  if (p.is_zero()) return p;
  Rational scale;
  GPoly gp = to_gpoly(p, impl_->order, &scale);
  // gp = scale * p
  Rational mult = scale;
  GPoly r = reduce(std::move(gp), impl_->reducers, impl_->order, true, &mult);
  return from_gpoly(p.ring(), r, mult);
}

MPoly normal_form(const MPoly& p, const std::vector<MPoly>& basis, const MonomialOrder& order) {
  return NormalFormer(basis, order)(p);
}

// ---------------------------------------------------------------------------
// Ideals

Ideal::Ideal(RingPtr ring, std::vector<MPoly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    gens_.push_back(g.in_ring(ring_));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto r = ring;
  return Ideal(std::move(r), {MPoly::constant(ring, Rational(1))});
}

const std::vector<MPoly>& Ideal::basis(const MonomialOrder& order) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  const std::string key = order.key();
  auto it = cache_->bases.find(key);
  if (it != cache_->bases.end()) return *it->second;
  auto gb = std::make_shared<const std::vector<MPoly>>(groebner_basis(gens_, order));
  return *cache_->bases.emplace(key, std::move(gb)).first->second;
}

const std::vector<MPoly>& Ideal::basis() const { return basis(MonomialOrder::grevlex(nvars())); }

bool Ideal::is_unit() const {
  const auto& gb = basis();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::contains(const MPoly& p) const {
  return normal_form(p.in_ring(ring_), basis(), MonomialOrder::grevlex(nvars())).is_zero();
}

Ideal Ideal::plus(const std::vector<MPoly>& more) const {
  std::vector<MPoly> g = gens_;
  g.insert(g.end(), more.begin(), more.end());
  return Ideal(ring_, std::move(g));
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
  os << ">";
  return os.str();
}

int dimension_from_leading_monomials(const std::vector<Monomial>& leading, std::size_t nvars) {
  for (const auto& m : leading)
    if (m.is_one()) return -1;
  std::vector<std::uint32_t> masks;
  for (const auto& m : leading) masks.push_back(support_mask(m));
  int best = 0;
  const std::uint32_t full = nvars >= 32 ? 0xffffffffu : ((1u << nvars) - 1);
  for (std::uint32_t s = 0; s <= full; ++s) {
    const int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (auto mk : masks) {
      if ((mk & ~s) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
    if (s == full) break;
  }
  return best;
}

int dimension(const Ideal& ideal) {
  const auto order = MonomialOrder::grevlex(ideal.nvars());
  const auto& gb = ideal.basis(order);
  std::vector<Monomial> lms;
  for (const auto& g : gb) lms.push_back(g.leading_term(order).m);
  return dimension_from_leading_monomials(lms, ideal.nvars());
}

bool is_zero_dimensional(const Ideal& ideal) { return dimension(ideal) <= 0; }

Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::size_t>& drop) {
  const auto order = MonomialOrder::elimination(ideal.nvars(), drop);
  std::vector<MPoly> kept;
  for (const auto& g : ideal.basis(order)) {
    bool uses = false;
    for (auto v : drop) uses = uses || g.uses_var(v);
    if (!uses) kept.push_back(g);
  }
  return Ideal(ideal.ring(), std::move(kept));
}

namespace {

std::string fresh_name(const Ring& ring, const std::string& base) {
  std::string name = base;
  while (ring.index_of(name) >= 0) name += "_";
  return name;
}

// Eliminates the last variable of `big` and maps back to `ring`.
Ideal eliminate_last(const RingPtr& ring, const RingPtr& big, std::vector<MPoly> gens) {
  const std::size_t y = big->size() - 1;
  const auto order = MonomialOrder::elimination(big->size(), {y});
  std::vector<MPoly> kept;
  for (const auto& g : groebner_basis(gens, order)) {
    if (!g.uses_var(y)) kept.push_back(g.in_ring(ring));
  }
  return Ideal(ring, std::move(kept));
}

}  // namespace

Ideal saturate(const Ideal& ideal, const MPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  if (g.is_constant()) return ideal;
  const RingPtr& ring = ideal.ring();
  RingPtr big = extend_ring(ring, {fresh_name(*ring, "sat_y")});
  std::vector<MPoly> gens;
  for (const auto& h : ideal.generators()) gens.push_back(h.in_ring(big));
  MPoly y = MPoly::variable(big, big->size() - 1);
  gens.push_back(MPoly::constant(big, Rational(1)) - y * g.in_ring(big));
  return eliminate_last(ring, big, std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring();
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  RingPtr big = extend_ring(ring, {fresh_name(*ring, "int_t")});
  MPoly t = MPoly::variable(big, big->size() - 1);
  MPoly one_minus_t = MPoly::constant(big, Rational(1)) - t;
  std::vector<MPoly> gens;
  for (const auto& h : a.generators()) gens.push_back(t * h.in_ring(big));
  for (const auto& h : b.generators()) gens.push_back(one_minus_t * h.in_ring(big));
  return eliminate_last(ring, big, std::move(gens));
}

Ideal saturate_ideal(const Ideal& ideal, const Ideal& by) {
  if (by.generators().empty()) throw std::invalid_argument("saturation by the zero ideal");
  std::vector<Ideal> parts;
  const auto order = MonomialOrder::grevlex(ideal.nvars());
  for (const auto& g : by.generators()) {
    // g in I makes I : g^inf the unit ideal, which is neutral for intersection.
    if (normal_form(g.in_ring(ideal.ring()), ideal.basis(order), order).is_zero()) continue;
    Ideal s = saturate(ideal, g);
    if (s.is_unit()) continue;
    parts.push_back(std::move(s));
  }
  if (parts.empty()) return Ideal::unit(ideal.ring());
  Ideal acc = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) acc = intersect(acc, parts[k]);
  return acc;
}

bool is_noether_position(const Ideal& ideal, const std::vector<std::size_t>& free_vars) {
  const std::size_t n = ideal.nvars();
  MonomialOrder::Block bound{{}, MonomialOrder::Kind::GrevLex};
  MonomialOrder::Block freeb{{}, MonomialOrder::Kind::GrevLex};
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(free_vars.begin(), free_vars.end(), i) != free_vars.end()) {
      freeb.vars.push_back(i);
    } else {
      bound.vars.push_back(i);
    }
  }
  const auto order = MonomialOrder::block({bound, freeb});
  const auto& gb = ideal.basis(order);
  if (gb.size() == 1 && gb[0].is_constant()) return true;
  for (auto v : bound.vars) {
    bool found = false;
    for (const auto& g : gb) {
      const Monomial& lm = g.leading_term(order).m;
      bool pure = lm.e[v] > 0;
      for (std::size_t k = 0; k < kMaxVars && pure; ++k)
        if (k != v && lm.e[k]) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool noether_position_check(const Ideal& ideal, int d) {
  if (dimension(ideal) != d) throw std::invalid_argument("noether_position_check: dimension mismatch");
  std::vector<std::size_t> free_vars;
  for (int i = 0; i < d; ++i) free_vars.push_back(static_cast<std::size_t>(i));
  return is_noether_position(ideal, free_vars);
}

}  // namespace polyopt
