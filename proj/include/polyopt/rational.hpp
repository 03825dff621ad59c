#pragma once

// Exact scalars. Integers and rationals are GMP values; every rational is kept
// canonical (reduced, positive denominator) by gmpxx arithmetic.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyopt {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "a/b" form, or "a" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

/// Smallest k with 2^k >= |r| (k may be negative); r must be nonzero.
long ceil_log2(const Rational& r);

/// 2^k as a rational, k of either sign.
Rational pow2(long k);

/// Decimal rendering of r truncated toward zero to `digits` fractional digits.
std::string to_decimal(const Rational& r, int digits);

}  // namespace polyopt
