#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gpc {

// Exact rational scalar used throughout the volume mathematics. Always kept
// in canonical form (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "p/q", "-p/q" (surrounding whitespace allowed). Throws
// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" form; integers are written as "p/1" so every exact field has the same
// shape in JSON/CSV output.
std::string to_fraction_string(const Rational& q);

// Decimal approximation with `digits` significant digits.
std::string to_decimal_string(const Rational& q, int digits = 20);

Rational rational_pow(const Rational& base, unsigned exponent);

double to_double(const Rational& q);

}  // namespace gpc
