#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace flexcolor {

// Every probability, weight and charge is an exact rational.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator);

// `p/q` in lowest terms; integers print without a denominator.
std::string to_string(const Rational& value);

// Accepts `p/q` or an integer, optionally signed. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational power(const Rational& base, unsigned exponent);

}  // namespace flexcolor
