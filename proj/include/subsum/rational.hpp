#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace subsum {

// GMP rationals are kept canonical by every arithmetic operator; values
// built from strings go through parse_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p/q" (no whitespace, no decimals). Throws
/// Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// num/den in lowest terms; den must be nonzero. (mpq_class(num, den) does not reduce.)
Rational fraction(std::int64_t num, std::int64_t den);

Rational pow(const Rational& base, std::uint64_t exponent);
Integer pow2(std::uint64_t exponent);

Rational abs(const Rational& value);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Greatest rational g such that every value is an integer multiple of g
/// (gcd of numerators over lcm of denominators). All values must be nonzero.
Rational rational_gcd(const Rational& a, const Rational& b);

double to_double(const Rational& value);

}  // namespace subsum
