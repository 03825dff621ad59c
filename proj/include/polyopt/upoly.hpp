#pragma once

// Dense univariate polynomials over Q.

#include <string>
#include <utility>
#include <vector>

#include "polyopt/rational.hpp"

namespace polyopt {

class UPoly {
 public:
  UPoly() = default;
  /// Coefficients lowest degree first; trailing zeros are trimmed.
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, std::size_t k);
  /// The identity polynomial x.
  static UPoly variable();
  /// From integer coefficients, lowest degree first.
  static UPoly from_ints(std::initializer_list<long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Zero past the degree.
  const Rational& coeff(std::size_t k) const;
  const Rational& leading() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  UPoly derivative() const;
  Rational operator()(const Rational& x) const;
  /// Sign of p(x), computed in integer arithmetic when the coefficients allow it.
  int sign_at(const Rational& x) const;

  /// Monic scaling; zero stays zero.
  UPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UPoly normalized() const;
  /// Integer coefficients with gcd 1, scaled by a positive factor (signs kept).
  UPoly content_free() const;

  /// p(x + c)
  UPoly shifted(const Rational& c) const;
  /// p(q(x))
  UPoly compose(const UPoly& q) const;

  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UPoly pow(const UPoly& p, unsigned e);

/// Quotient and remainder over Q. Throws std::domain_error on a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly rem(const UPoly& a, const UPoly& b);
/// a / b where b is known to divide a; throws std::logic_error otherwise.
UPoly exact_div(const UPoly& a, const UPoly& b);
/// lc(b)^(deg a - deg b + 1) * a mod b.
UPoly pseudo_rem(const UPoly& a, const UPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// p / gcd(p, p'), monic. Throws std::invalid_argument for p = 0.
UPoly squarefree_part(const UPoly& p);

}  // namespace polyopt
