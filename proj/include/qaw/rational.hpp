#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace qaw {

/// Exact rational scalar. gmpxx keeps results of arithmetic in lowest terms
/// with a positive denominator; values built from a raw numerator/denominator
/// pair must go through make_rational().
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Integer power, negative exponents allowed. Throws std::domain_error for 0^k, k < 0.
Rational pow(const Rational& base, long exponent);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& x);

/// Parses "num/den" or "num". Accepts U+2212 as a minus sign.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact square root when x is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& x);

}  // namespace qaw
