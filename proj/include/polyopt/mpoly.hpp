#pragma once

// Sparse multivariate polynomials over Q, monomial orders, Jacobians and their
// minors, and linear changes of coordinates.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "polyopt/interval.hpp"
#include "polyopt/rational.hpp"
#include "polyopt/upoly.hpp"

namespace polyopt {

inline constexpr std::size_t kMaxVars = 16;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  static Monomial var(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint16_t>(power);
    return m;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return r;
  }
};

/// a | b
inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}
/// b / a, assuming a | b.
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
  return r;
}
inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
  return r;
}
inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

/// Ordered variable names. Rings are shared by pointer and compared by names.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  /// -1 when absent.
  int index_of(const std::string& name) const;
  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;
RingPtr make_ring(std::vector<std::string> names);
/// x1..xn
RingPtr make_ring(std::size_t n, const std::string& prefix = "x");
/// `base` followed by `extra`.
RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra);
bool same_ring(const RingPtr& a, const RingPtr& b);

class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex };
  struct Block {
    std::vector<std::size_t> vars;  // in decreasing priority
    Kind kind;
  };

  static MonomialOrder lex(std::size_t n);
  static MonomialOrder grevlex(std::size_t n);
  /// Blocks compared left to right; variables not listed are not allowed.
  static MonomialOrder block(std::vector<Block> blocks);
  /// Eliminates `front` (grevlex) ahead of the remaining variables (grevlex).
  static MonomialOrder elimination(std::size_t n, const std::vector<std::size_t>& front);

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  /// Stable textual identity, used as a cache key.
  std::string key() const;
  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.key() == b.key(); }

 private:
  std::vector<Block> blocks_;
  std::size_t nvars_ = 0;
  bool plain_grevlex_ = false;
};

class CoordinateChange {
 public:
  using Matrix = std::vector<std::vector<Rational>>;
  /// Throws std::invalid_argument when the matrix is not square or singular.
  explicit CoordinateChange(Matrix m);
  static CoordinateChange identity(std::size_t n);

  std::size_t size() const { return matrix_.size(); }
  const Matrix& matrix() const { return matrix_; }
  const Matrix& inverse() const { return inverse_; }
  bool is_identity() const;
  /// this * other
  CoordinateChange compose(const CoordinateChange& other) const;

 private:
  Matrix matrix_;
  Matrix inverse_;
};

class MPoly {
 public:
  struct Term {
    Monomial m;
    Rational c;
  };

  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}
  /// Terms may be unsorted and contain duplicates or zeros.
  MPoly(RingPtr ring, std::vector<Term> terms);

  static MPoly constant(RingPtr ring, const Rational& c);
  static MPoly variable(RingPtr ring, std::size_t i);
  static MPoly monomial(RingPtr ring, const Monomial& m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_ ? ring_->size() : 0; }
  /// Sorted by decreasing grevlex order.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  Rational constant_value() const;
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool uses_var(std::size_t var) const { return degree_in(var) > 0; }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly derivative(std::size_t var) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  Interval evaluate_box(const std::vector<Interval>& box) const;
  /// p(A x)
  MPoly change_coordinates(const CoordinateChange& a) const;
  /// p(images[0], ..., images[n-1]); all images share one ring.
  MPoly substitute(const std::vector<MPoly>& images) const;
  /// Same polynomial viewed in `target`, matching variables by name. Throws if
  /// a used variable is missing from `target`.
  MPoly in_ring(const RingPtr& target) const;

  /// Leading term under `order`; throws on zero.
  const Term& leading_term(const MonomialOrder& order) const;
  /// Coefficients of powers of `var`, lowest first.
  std::vector<MPoly> coefficients_in(std::size_t var) const;
  /// Univariate view when only `var` occurs (throws otherwise).
  UPoly to_upoly(std::size_t var) const;
  static MPoly from_upoly(RingPtr ring, std::size_t var, const UPoly& p);

  /// Scaled to integer coefficients with gcd 1 and positive leading coefficient
  /// under `order`.
  MPoly primitive(const MonomialOrder& order) const;
  MPoly monic(const MonomialOrder& order) const;

  std::string to_string() const;

 private:
  void normalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

MPoly pow(const MPoly& p, unsigned e);

using PolyMatrix = std::vector<std::vector<MPoly>>;

/// Rows are polys, columns the variables X_k..X_n (k is 1-based).
PolyMatrix truncated_jacobian(const std::vector<MPoly>& polys, std::size_t k);
/// All r x r minors, row subsets outer and column subsets inner, both in
/// lexicographic order.
std::vector<MPoly> minors(const PolyMatrix& m, std::size_t r);

}  // namespace polyopt
