#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "nbts/errors.hpp"

namespace nbts {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar used in every verdict path. Kept canonical by the
/// backend: coprime numerator/denominator, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

/// Builds a rational from any integer pair, normalizing the denominator sign.
/// Throws InvalidInput on a zero denominator.
Rational make_rational(Int numerator, Int denominator);

/// Parses "3", "-3", "0", "3/4", "-3/4". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

/// Decimal approximation for display columns only; never used in verdicts.
double approx(const Rational& value);

}  // namespace nbts
