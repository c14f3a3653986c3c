#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bcov {

/// Arbitrary-precision rational, always kept in canonical (reduced, den > 0)
/// form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or a finite decimal such as "0.4" / "-1.25e-3" into an
/// exact rational. Throws DomainError on anything else (including q = 0).
Rational parse_rational(std::string_view text);

/// Always "numerator/denominator", also for integers ("1/1").
std::string to_fraction_string(const Rational& q);

std::vector<Rational> parse_rational_list(std::string_view comma_separated);

Rational pow(const Rational& base, unsigned long exponent);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }

/// Floor of a rational as a (possibly huge) integer.
Integer floor(const Rational& q);

/// Nearest double (round-half-even); `mpq_get_d` truncates, which would print
/// 1/25 as 0.039999999999999994.
double to_double(const Rational& q);

/// Exact rational value of a finite double.
Rational from_double(double x);

}  // namespace bcov
