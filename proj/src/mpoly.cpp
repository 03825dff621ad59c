#include "polyopt/mpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace polyopt {

// ---------------------------------------------------------------------------
// Rings

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) {
    throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVars) + ")");
  }
}

int Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(std::vector<std::string> names) { return std::make_shared<const Ring>(std::move(names)); }

RingPtr make_ring(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return make_ring(std::move(names));
}

RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra) {
  std::vector<std::string> names = base->names();
  names.insert(names.end(), extra.begin(), extra.end());
  return make_ring(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------------------
// Monomial orders

namespace {

int grevlex_all(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

int compare_block(const MonomialOrder::Block& blk, const Monomial& a, const Monomial& b) {
  if (blk.kind == MonomialOrder::Kind::Lex) {
    for (auto v : blk.vars) {
      if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
    }
    return 0;
  }
  unsigned da = 0, db = 0;
  for (auto v : blk.vars) {
    da += a.e[v];
    db += b.e[v];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = blk.vars.size(); k-- > 0;) {
    const auto v = blk.vars[k];
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t n) {
  Block b{{}, Kind::Lex};
  for (std::size_t i = 0; i < n; ++i) b.vars.push_back(i);
  return block({b});
}

MonomialOrder MonomialOrder::grevlex(std::size_t n) {
  Block b{{}, Kind::GrevLex};
  for (std::size_t i = 0; i < n; ++i) b.vars.push_back(i);
  return block({b});
}

MonomialOrder MonomialOrder::block(std::vector<Block> blocks) {
  MonomialOrder o;
  std::vector<bool> seen;
  for (const auto& b : blocks) {
    for (auto v : b.vars) {
      if (v >= kMaxVars) throw std::invalid_argument("order variable out of range");
      if (v >= seen.size()) seen.resize(v + 1, false);
      if (seen[v]) throw std::invalid_argument("variable listed twice in monomial order");
      seen[v] = true;
    }
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("monomial order must cover variables 0..n-1");
  o.nvars_ = seen.size();
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(), [](const Block& b) { return b.vars.empty(); }),
               blocks.end());
  o.blocks_ = std::move(blocks);
  if (o.blocks_.size() == 1 && o.blocks_[0].kind == Kind::GrevLex) {
    bool natural = true;
    for (std::size_t i = 0; i < o.blocks_[0].vars.size(); ++i) natural = natural && o.blocks_[0].vars[i] == i;
    o.plain_grevlex_ = natural;
  }
  return o;
}

MonomialOrder MonomialOrder::elimination(std::size_t n, const std::vector<std::size_t>& front) {
  Block a{{}, Kind::GrevLex}, b{{}, Kind::GrevLex};
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(front.begin(), front.end(), i) != front.end()) {
      a.vars.push_back(i);
    } else {
      b.vars.push_back(i);
    }
  }
  return block({a, b});
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (plain_grevlex_) return grevlex_all(a, b);
  for (const auto& blk : blocks_) {
    if (int c = compare_block(blk, a, b); c != 0) return c;
  }
  return 0;
}

std::string MonomialOrder::key() const {
  std::ostringstream os;
  for (const auto& b : blocks_) {
    os << (b.kind == Kind::Lex ? "L(" : "G(");
    for (auto v : b.vars) os << v << ",";
    os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Coordinate changes

namespace {

using Matrix = CoordinateChange::Matrix;

Matrix invert(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("coordinate change must be square");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("coordinate change is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational s = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

CoordinateChange::CoordinateChange(Matrix m) : matrix_(std::move(m)), inverse_(invert(matrix_)) {}

CoordinateChange CoordinateChange::identity(std::size_t n) {
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return CoordinateChange(std::move(m));
}

bool CoordinateChange::is_identity() const {
  for (std::size_t i = 0; i < matrix_.size(); ++i)
    for (std::size_t j = 0; j < matrix_.size(); ++j)
      if (matrix_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

CoordinateChange CoordinateChange::compose(const CoordinateChange& other) const {
  const std::size_t n = size();
  if (other.size() != n) throw std::invalid_argument("coordinate change size mismatch");
  Matrix r(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (matrix_[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += matrix_[i][k] * other.matrix_[k][j];
    }
  return CoordinateChange(std::move(r));
}

// ---------------------------------------------------------------------------
// Polynomials

namespace {

struct CanonicalGreater {
  bool operator()(const MPoly::Term& a, const MPoly::Term& b) const { return grevlex_all(a.m, b.m) > 0; }
};

void require_same_ring(const MPoly& a, const MPoly& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("polynomials belong to different rings");
}

}  // namespace

MPoly::MPoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void MPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), CanonicalGreater{});
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c == 0; }), out.end());
  terms_ = std::move(out);
}

MPoly MPoly::constant(RingPtr ring, const Rational& c) {
  if (c == 0) return MPoly(std::move(ring));
  return MPoly(std::move(ring), {Term{Monomial{}, c}});
}

MPoly MPoly::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->size()) throw std::out_of_range("variable index out of range");
  return MPoly(std::move(ring), {Term{Monomial::var(i), Rational(1)}});
}

MPoly MPoly::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  return MPoly(std::move(ring), {Term{m, c}});
}

Rational MPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_[0].c;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().m.degree());
}

int MPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.m.e[var]);
  return d;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.is_zero()) return *this;
  if (!ring_) ring_ = o.ring_;
  require_same_ring(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) {
      c = -1;
    } else if (j == o.terms_.size()) {
      c = 1;
    } else {
      c = grevlex_all(terms_[i].m, o.terms_[j].m);
    }
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].c + o.terms_[j].c;
      if (s != 0) out.push_back(Term{terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly(a.ring_ ? a.ring_ : b.ring_);
  require_same_ring(a, b);
  std::vector<MPoly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) terms.push_back(MPoly::Term{x.m * y.m, x.c * y.c});
  return MPoly(a.ring_, std::move(terms));
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && !same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
  }
  return true;
}

MPoly pow(const MPoly& p, unsigned e) {
  MPoly result = MPoly::constant(p.ring(), Rational(1));
  MPoly base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(std::size_t var) const {
  if (var >= nvars()) throw std::out_of_range("derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.m.e[var] == 0) continue;
    Term d{t.m, t.c * static_cast<long>(t.m.e[var])};
    d.m.e[var] = static_cast<std::uint16_t>(d.m.e[var] - 1);
    out.push_back(std::move(d));
  }
  return MPoly(ring_, std::move(out));
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars()) throw std::invalid_argument("evaluation point has wrong length");
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational v = t.c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned k = 0; k < t.m.e[i]; ++k) v *= point[i];
    }
    acc += v;
  }
  return acc;
}

Interval MPoly::evaluate_box(const std::vector<Interval>& box) const {
  if (box.size() != nvars()) throw std::invalid_argument("evaluation box has wrong length");
  Interval acc = Interval::point(Rational(0));
  for (const auto& t : terms_) {
    Interval v = Interval::point(t.c);
    for (std::size_t i = 0; i < box.size(); ++i) {
      if (t.m.e[i]) v = v * pow(box[i], t.m.e[i]);
    }
    acc = acc + v;
  }
  return acc;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (images.size() != nvars()) throw std::invalid_argument("substitution has wrong length");
  RingPtr target = images.empty() ? ring_ : images[0].ring();
  std::vector<std::vector<MPoly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly::constant(target, Rational(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MPoly acc(target);
  for (const auto& t : terms_) {
    MPoly v = MPoly::constant(target, t.c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.m.e[i]) v = v * power(i, t.m.e[i]);
    }
    acc += v;
  }
  return acc;
}

MPoly MPoly::change_coordinates(const CoordinateChange& a) const {
  const std::size_t n = nvars();
  if (a.size() != n) throw std::invalid_argument("coordinate change dimension mismatch");
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    MPoly row(ring_);
    for (std::size_t j = 0; j < n; ++j) {
      if (a.matrix()[i][j] != 0) row += MPoly::variable(ring_, j) * a.matrix()[i][j];
    }
    images.push_back(std::move(row));
  }
  return substitute(images);
}

MPoly MPoly::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) return MPoly(target, terms_);
  std::vector<int> map(nvars(), -1);
  for (std::size_t i = 0; i < nvars(); ++i) map[i] = target->index_of(ring_->name(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term nt{Monomial{}, t.c};
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (map[i] < 0) throw std::invalid_argument("variable " + ring_->name(i) + " missing from target ring");
      nt.m.e[static_cast<std::size_t>(map[i])] = t.m.e[i];
    }
    out.push_back(std::move(nt));
  }
  return MPoly(target, std::move(out));
}

const MPoly::Term& MPoly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.compare(t.m, best->m) > 0) best = &t;
  return *best;
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    const std::size_t k = t.m.e[var];
    if (buckets.size() <= k) buckets.resize(k + 1);
    Term s = t;
    s.m.e[var] = 0;
    buckets[k].push_back(std::move(s));
  }
  std::vector<MPoly> out;
  for (auto& b : buckets) out.emplace_back(ring_, std::move(b));
  return out;
}

UPoly MPoly::to_upoly(std::size_t var) const {
  std::vector<Rational> c;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (i != var && t.m.e[i]) throw std::invalid_argument("polynomial is not univariate in the requested variable");
    }
    const std::size_t k = t.m.e[var];
    if (c.size() <= k) c.resize(k + 1);
    c[k] += t.c;
  }
  return UPoly(std::move(c));
}

MPoly MPoly::from_upoly(RingPtr ring, std::size_t var, const UPoly& p) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (p.coefficients()[k] != 0) terms.push_back(Term{Monomial::var(var, static_cast<unsigned>(k)), p.coefficients()[k]});
  }
  return MPoly(std::move(ring), std::move(terms));
}

MPoly MPoly::primitive(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
  for (const auto& t : terms_) {
    Integer v = t.c.get_num() * (den_lcm / t.c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading_term(order).c < 0) scale = -scale;
  return *this * scale;
}

MPoly MPoly::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / leading_term(order).c;
  return *this * inv;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational a = abs(t.c);
    if (first) {
      if (t.c < 0) os << "-";
    } else {
      os << (t.c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (a != 1 || t.m.is_one()) {
      os << polyopt::to_string(a);
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (need_star) os << "*";
      os << ring_->name(i);
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Jacobians and minors

PolyMatrix truncated_jacobian(const std::vector<MPoly>& polys, std::size_t k) {
  if (polys.empty()) return {};
  const std::size_t n = polys[0].nvars();
  if (k < 1 || k > n) throw std::out_of_range("truncated_jacobian: k out of range");
  PolyMatrix m;
  for (const auto& p : polys) {
    std::vector<MPoly> row;
    for (std::size_t v = k - 1; v < n; ++v) row.push_back(p.derivative(v));
    m.push_back(std::move(row));
  }
  return m;
}

namespace {

void subsets(std::size_t n, std::size_t r, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == r) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (r - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets(n, r, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, r, 0, cur, out);
  return out;
}

// Laplace expansion along the rows rows[k..], columns given by a bit mask.
class MinorExpander {
 public:
  MinorExpander(const PolyMatrix& m, const std::vector<std::size_t>& rows, RingPtr ring)
      : m_(m), rows_(rows), ring_(std::move(ring)) {}

  MPoly det(std::size_t k, std::uint32_t cols) {
    if (k == rows_.size()) return MPoly::constant(ring_, Rational(1));
    auto key = std::make_pair(k, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    MPoly acc(ring_);
    int position = 0;
    for (std::size_t c = 0; c < 32; ++c) {
      if (!(cols & (1u << c))) continue;
      const MPoly& entry = m_[rows_[k]][c];
      if (!entry.is_zero()) {
        MPoly sub = det(k + 1, cols & ~(1u << c));
        if (!sub.is_zero()) {
          MPoly term = entry * sub;
          if (position % 2 == 0) {
            acc += term;
          } else {
            acc -= term;
          }
        }
      }
      ++position;
    }
    memo_.emplace(key, acc);
    return acc;
  }

 private:
  const PolyMatrix& m_;
  const std::vector<std::size_t>& rows_;
  RingPtr ring_;
  std::map<std::pair<std::size_t, std::uint32_t>, MPoly> memo_;
};

}  // namespace

std::vector<MPoly> minors(const PolyMatrix& m, std::size_t r) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  if (r > rows || r > cols) throw std::invalid_argument("minor size exceeds matrix dimensions");
  if (cols > 32) throw std::invalid_argument("too many columns for minor enumeration");
  RingPtr ring;
  for (const auto& row : m)
    for (const auto& e : row)
      if (!ring && e.ring()) ring = e.ring();
  std::vector<MPoly> out;
  if (r == 0) {
    out.push_back(MPoly::constant(ring, Rational(1)));
    return out;
  }
  const auto row_sets = subsets(rows, r);
  const auto col_sets = subsets(cols, r);
  for (const auto& rs : row_sets) {
    MinorExpander ex(m, rs, ring);
    for (const auto& cs : col_sets) {
      std::uint32_t mask = 0;
      for (auto c : cs) mask |= 1u << c;
      out.push_back(ex.det(0, mask));
    }
  }
  return out;
}

}  // namespace polyopt
