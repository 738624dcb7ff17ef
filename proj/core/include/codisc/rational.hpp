#ifndef CODISC_RATIONAL_HPP
#define CODISC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace codisc {

// All public results of the library are exact. Integer and Rational are the
// only numeric carriers; doubles appear solely in display helpers and in the
// asymptotic estimate bounds that involve sqrt(pi*n).
using Integer = mpz_class;
using Rational = mpq_class;

/// C(n, k) as an exact integer; 0 outside the triangle.
Integer binom(long n, long k);

/// 2^e.
Integer pow2(unsigned long e);

/// num/den in lowest terms. Throws std::domain_error when den == 0.
Rational ratio(const Integer& num, const Integer& den);

inline Rational ratio(long num, long den) { return ratio(Integer(num), Integer(den)); }

/// "p/q" (or "p" when integral).
std::string to_string(const Rational& q);

/// Parses "p", "-p", or "p/q". Throws parse_error on malformed input.
Rational parse_rational(std::string_view text);

/// Decimal rendering with `digits` significant digits, round half up.
std::string decimal_string(const Rational& q, int digits = 6);

/// Fixed-point rendering with `places` digits after the point, round half up.
std::string fixed_string(const Rational& q, int places);

double to_double(const Rational& q);

}  // namespace codisc

#endif
