#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace adspace {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational arithmetic. All solver logic runs on this type; floating
/// point only ever appears in human-facing rendering.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" (q > 0). Decimal and exponent notation are
/// rejected. Throws std::invalid_argument on malformed text; callers that
/// know a source location wrap it into a ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text form: lowest terms, "p/q", or bare "p" when q = 1.
/// parse_rational(to_string(x)) == x for every x.
std::string to_string(const Rational& value);

/// Fixed-point rendering with `places` fractional digits, rounding half away
/// from zero. For human eyes only; never parsed back.
std::string to_decimal_string(const Rational& value, int places = 6);

/// Smallest integer >= value.
BigInt rational_ceil(const Rational& value);

}  // namespace adspace
