#pragma once

// Exact rational scalar used for every coordinate in the library.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace selfcover {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", an integer, or a finite decimal ("-1.25", "3e-2") exactly.
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or the plain integer when the denominator is 1.
std::string to_string(const Rational& value);

/// num/den in canonical form (mpq_class(num, den) alone does not reduce).
Rational frac(long num, long den);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

inline Rational abs_value(const Rational& value) { return abs(value); }

/// 2^exponent as a rational (exponent may be negative).
Rational pow2(int exponent);

double to_double(const Rational& value);

}  // namespace selfcover
