#include "polyopt/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace polyopt {

namespace {
const Rational kZero(0);
}

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::variable() { return monomial(Rational(1), 1); }

UPoly UPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : kZero; }

const Rational& UPoly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return UPoly();
  std::vector<Rational> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int UPoly::sign_at(const Rational& x) const {
  if (coeffs_.empty()) return 0;
  bool integral = true;
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) {
      integral = false;
      break;
    }
  }
  if (!integral) return sgn((*this)(x));
  // d^deg * p(n/d), all in Z.
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = coeffs_.back().get_num();
  Integer dpow = 1;
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
    dpow *= d;
    acc = acc * n + coeffs_[k].get_num() * dpow;
  }
  return sgn(acc);
}

UPoly UPoly::monic() const {
  if (coeffs_.empty()) return *this;
  Rational inv = 1 / coeffs_.back();
  return *this * inv;
}

UPoly UPoly::content_free() const {
  if (coeffs_.empty()) return *this;
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return *this * scale;
}

UPoly UPoly::normalized() const {
  UPoly r = content_free();
  if (!r.is_zero() && r.leading() < 0) r = -r;
  return r;
}

UPoly UPoly::shifted(const Rational& c) const {
  // Taylor shift by repeated synthetic division.
  std::vector<Rational> a = coeffs_;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
  }
  return UPoly(std::move(a));
}

UPoly UPoly::compose(const UPoly& q) const {
  UPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + UPoly::constant(*it);
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << polyopt::to_string(a);
      continue;
    }
    if (a != 1) os << polyopt::to_string(a) << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UPoly pow(const UPoly& p, unsigned e) {
  UPoly result = UPoly::constant(Rational(1));
  UPoly base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  Rational inv = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational c = r[static_cast<std::size_t>(k + db)] * inv;
    q[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly rem(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

UPoly pseudo_rem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Rational> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const Rational& lb = b.leading();
  for (int top = a.degree(); top >= db; --top) {
    Rational c = r[static_cast<std::size_t>(top)];
    for (auto& x : r) x *= lb;
    if (c != 0) {
      const int shift = top - db;
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(shift + j)] -= c * bc[static_cast<std::size_t>(j)];
    }
    r[static_cast<std::size_t>(top)] = 0;
  }
  r.resize(static_cast<std::size_t>(db));
  return UPoly(std::move(r));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.content_free();
  UPoly y = b.content_free();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UPoly r = pseudo_rem(x, y).content_free();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part of the zero polynomial");
  if (p.degree() == 0) return UPoly::constant(Rational(1));
  UPoly g = gcd(p, p.derivative());
  return exact_div(p, g).monic();
}

}  // namespace polyopt
