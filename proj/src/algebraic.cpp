#include "polyopt/algebraic.hpp"

#include <stdexcept>

namespace polyopt {

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p.content_free());
  UPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d.content_free());
  while (true) {
    UPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back((-r).content_free());
  }
  return seq;
}

int sign_variations(const std::vector<UPoly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& s : seq) {
    int sg = s.sign_at(x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

int sturm_count(const std::vector<UPoly>& seq, const Rational& a, const Rational& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

Rational root_bound(const UPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m = 0;
  const Rational& lc = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeff(static_cast<std::size_t>(k)) / lc);
    if (r > m) m = r;
  }
  Rational cauchy = m + 1;  // every root has modulus < cauchy
  return pow2(ceil_log2(cauchy));
}

int real_root_count(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("real_root_count of zero polynomial");
  if (p.degree() < 1) return 0;
  UPoly s = squarefree_part(p);
  auto seq = sturm_sequence(s);
  Rational b = root_bound(s);
  return sturm_count(seq, -b, b);
}

namespace {

// Picks a split point in (lo, hi) that is not a root of p.
Rational split_point(const UPoly& p, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  if (p.sign_at(mid) != 0) return mid;
  Rational w = hi - lo;
  for (long k = 3;; ++k) {
    Rational cand = mid + w * pow2(-k);
    if (p.sign_at(cand) != 0) return cand;
    cand = mid - w * pow2(-k);
    if (p.sign_at(cand) != 0) return cand;
  }
}

void isolate(const UPoly& p, const std::vector<UPoly>& seq, const Rational& lo, const Rational& hi, int vlo,
             int vhi, std::vector<Interval>& out) {
  const int count = vlo - vhi;
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = split_point(p, lo, hi);
  int vmid = sign_variations(seq, mid);
  isolate(p, seq, lo, mid, vlo, vmid, out);
  isolate(p, seq, mid, hi, vmid, vhi, out);
}

bool has_root_in(const UPoly& g, const Interval& iv) {
  if (g.degree() < 1) return false;
  if (iv.is_point()) return g.sign_at(iv.lo) == 0;
  if (g.sign_at(iv.lo) == 0) return true;
  auto seq = sturm_sequence(squarefree_part(g));
  return sturm_count(seq, iv.lo, iv.hi) > 0;
}

}  // namespace

std::vector<Interval> real_root_isolation(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("real_root_isolation of zero polynomial");
  std::vector<Interval> out;
  if (p.degree() < 1) return out;
  UPoly s = squarefree_part(p).normalized();
  auto seq = sturm_sequence(s);
  Rational b = root_bound(s);
  isolate(s, seq, -b, b, sign_variations(seq, -b), sign_variations(seq, b), out);
  // Neighbours may share a (non-root) endpoint; shrink the left one away from it.
  for (std::size_t i = 1; i < out.size(); ++i) {
    Interval& left = out[i - 1];
    const int slo = s.sign_at(left.lo);
    while (left.hi == out[i].lo) {
      Rational mid = split_point(s, left.lo, left.hi);
      if (s.sign_at(mid) == slo) {
        left.lo = mid;
      } else {
        left.hi = mid;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

AlgebraicNumber::AlgebraicNumber(UPoly annihilator, Interval isolating, Unchecked)
    : annihilator_(std::move(annihilator)), interval_(std::move(isolating)) {}

AlgebraicNumber::AlgebraicNumber(const UPoly& annihilator, Interval isolating) {
  if (annihilator.degree() < 1) throw std::invalid_argument("annihilator must be nonconstant");
  annihilator_ = squarefree_part(annihilator).normalized();
  if (isolating.is_point()) {
    if (annihilator_.sign_at(isolating.lo) != 0) throw std::invalid_argument("point interval is not a root");
    interval_ = std::move(isolating);
    return;
  }
  const bool lo_root = annihilator_.sign_at(isolating.lo) == 0;
  const bool hi_root = annihilator_.sign_at(isolating.hi) == 0;
  auto seq = sturm_sequence(annihilator_);
  int count = sturm_count(seq, isolating.lo, isolating.hi) + (lo_root ? 1 : 0);
  if (count != 1) throw std::invalid_argument("interval does not isolate exactly one root");
  if (lo_root) {
    interval_ = Interval::point(isolating.lo);
  } else if (hi_root) {
    interval_ = Interval::point(isolating.hi);
  } else {
    interval_ = std::move(isolating);
  }
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
  return AlgebraicNumber(UPoly({Rational(-r), Rational(1)}).normalized(), Interval::point(r), Unchecked{});
}

std::vector<AlgebraicNumber> AlgebraicNumber::real_roots(const UPoly& p) {
  std::vector<AlgebraicNumber> out;
  if (p.degree() < 1) return out;
  UPoly s = squarefree_part(p).normalized();
  for (auto& iv : real_root_isolation(s)) out.push_back(AlgebraicNumber(s, std::move(iv), Unchecked{}));
  return out;
}

bool AlgebraicNumber::exact_rational(Rational& out) const {
  if (interval_.is_point()) {
    out = interval_.lo;
    return true;
  }
  if (annihilator_.degree() == 1) {
    out = -annihilator_.coeff(0) / annihilator_.coeff(1);
    return true;
  }
  return false;
}

AlgebraicNumber AlgebraicNumber::refined(const Rational& width) const {
  if (width <= 0) throw std::invalid_argument("refinement width must be positive");
  AlgebraicRefiner r(*this);
  r.refine_to(width);
  return r.value();
}

namespace {

// The rational with the smallest denominator in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  return Rational(fl) + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl));
}

}  // namespace

AlgebraicNumber AlgebraicNumber::simplified() const {
  Rational r;
  if (exact_rational(r)) return from_rational(r);
  // A rational root a/b has b | lc, so it is the simplest rational in any
  // isolating interval narrower than 1/(2 lc^2).
  const UPoly p = annihilator_.normalized();
  const Rational lc = abs(p.leading());
  AlgebraicNumber fine = refined(1 / (2 * lc * lc));
  if (fine.exact_rational(r)) return from_rational(r);
  if (fine.interval_.lo > 0 || fine.interval_.hi < 0 || fine.interval_.contains(Rational(0))) {
    Rational c = fine.interval_.contains(Rational(0)) ? Rational(0) : simplest_between(fine.interval_.lo, fine.interval_.hi);
    if (fine.interval_.lo < 0 && fine.interval_.hi < 0) c = -simplest_between(-fine.interval_.hi, -fine.interval_.lo);
    if (p(c) == 0) return from_rational(c);
  }
  return *this;
}

std::string AlgebraicNumber::decimal(int digits) const {
  Rational exact;
  if (exact_rational(exact)) return to_decimal(exact, digits);
  Rational w = 1;
  for (int i = 0; i < digits + 2; ++i) w /= 10;
  AlgebraicNumber r = refined(w);
  return to_decimal(r.interval().midpoint(), digits);
}

AlgebraicRefiner::AlgebraicRefiner(const AlgebraicNumber& a) : p_(a.annihilator()), iv_(a.interval()) {
  if (!iv_.is_point()) sign_lo_ = p_.sign_at(iv_.lo);
}

void AlgebraicRefiner::step() {
  if (iv_.is_point()) return;
  if (p_.degree() == 1) {
    iv_ = Interval::point(-p_.coeff(0) / p_.coeff(1));
    return;
  }
  Rational mid = iv_.midpoint();
  int s = p_.sign_at(mid);
  if (s == 0) {
    iv_ = Interval::point(mid);
  } else if (s == sign_lo_) {
    iv_.lo = mid;
  } else {
    iv_.hi = mid;
  }
}

void AlgebraicRefiner::refine_to(const Rational& width) {
  while (iv_.width() > width) step();
}

AlgebraicNumber AlgebraicRefiner::value() const { return AlgebraicNumber(p_, iv_, AlgebraicNumber::Unchecked{}); }

Ordering alg_compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  const Interval& ia = a.interval();
  const Interval& ib = b.interval();
  if (ia.hi < ib.lo) return Ordering::Less;
  if (ib.hi < ia.lo) return Ordering::Greater;
  UPoly g = gcd(a.annihilator(), b.annihilator());
  if (g.degree() >= 1) {
    Interval common(ia.lo > ib.lo ? ia.lo : ib.lo, ia.hi < ib.hi ? ia.hi : ib.hi);
    if (has_root_in(g, common)) return Ordering::Equal;
  }
  AlgebraicRefiner ra(a), rb(b);
  while (true) {
    ra.step();
    rb.step();
    if (ra.interval().hi < rb.interval().lo) return Ordering::Less;
    if (rb.interval().hi < ra.interval().lo) return Ordering::Greater;
  }
}

int sign_at(const UPoly& p, const AlgebraicNumber& a) {
  if (p.is_zero()) return 0;
  if (a.interval().is_point()) return p.sign_at(a.interval().lo);
  UPoly g = gcd(p, a.annihilator());
  if (g.degree() >= 1 && has_root_in(g, a.interval())) return 0;
  AlgebraicRefiner r(a);
  while (true) {
    Interval v = evaluate(p, r.interval());
    if (int s = v.strict_sign(); s != 0) return s;
    if (r.interval().is_point()) return p.sign_at(r.interval().lo);
    r.step();
  }
}

namespace {

Rational floor_rational(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(q);
}

Rational ceil_rational(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(q);
}

}  // namespace

Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b, std::mt19937_64& rng) {
  if (alg_compare(a, b) != Ordering::Less) throw std::invalid_argument("rational_between requires a < b");
  AlgebraicRefiner ra(a), rb(b);
  while (!(ra.interval().hi < rb.interval().lo)) {
    ra.step();
    rb.step();
  }
  const Rational lo = ra.interval().hi;
  const Rational hi = rb.interval().lo;
  // Grid of dyadics with spacing <= gap/8; at least seven grid points lie inside.
  const Rational step = pow2(ceil_log2(hi - lo) - 4);
  const Rational first = floor_rational(lo / step) + 1;
  const Rational last = ceil_rational(hi / step) - 1;
  Rational middle = floor_rational((first + last) / 2);
  const long offset = static_cast<long>(rng() % 3) - 1;
  Rational m = middle + offset;
  if (m < first) m = first;
  if (m > last) m = last;
  return m * step;
}

Rational rational_below(const AlgebraicNumber& a, std::mt19937_64& rng) {
  const long k = static_cast<long>(rng() % 4);
  return floor_rational(a.interval().lo) - 1 - Rational(k) / 2;
}

Rational rational_above(const AlgebraicNumber& a, std::mt19937_64& rng) {
  const long k = static_cast<long>(rng() % 4);
  return ceil_rational(a.interval().hi) + 1 + Rational(k) / 2;
}

// ---------------------------------------------------------------------------
// Subresultant PRS over Q[T].

namespace {

void trim(BivariatePoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const BivariatePoly& p) { return static_cast<int>(p.size()) - 1; }

BivariatePoly prem(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r = a;
  const int db = deg(b);
  const UPoly& lb = b.back();
  for (int top = deg(a); top >= db; --top) {
    UPoly c = r[static_cast<std::size_t>(top)];
    for (auto& x : r) x = x * lb;
    if (!c.is_zero()) {
      const int shift = top - db;
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(shift + j)] -= c * b[static_cast<std::size_t>(j)];
    }
    r[static_cast<std::size_t>(top)] = UPoly();
  }
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  return r;
}

}  // namespace

UPoly bivariate_resultant(BivariatePoly a, BivariatePoly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return UPoly();
  Rational s = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) s = -1;
  }
  if (deg(b) == 0) return pow(b[0], static_cast<unsigned>(deg(a))) * s;
  UPoly g = UPoly::constant(Rational(1));
  UPoly h = UPoly::constant(Rational(1));
  while (true) {
    const int delta = deg(a) - deg(b);
    if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) s = -s;
    BivariatePoly r = prem(a, b);
    a = std::move(b);
    if (r.empty()) return UPoly();
    UPoly divisor = g * pow(h, static_cast<unsigned>(delta));
    for (auto& c : r) c = exact_div(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta > 0) h = exact_div(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    if (deg(b) == 0) {
      const unsigned da = static_cast<unsigned>(deg(a));
      UPoly num = pow(b.back(), da);
      UPoly res = da >= 1 ? exact_div(num, pow(h, da - 1)) : num;
      return res * s;
    }
  }
}

}  // namespace polyopt
