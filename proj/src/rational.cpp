#include "nbts/rational.hpp"

#include <cctype>
#include <sstream>

namespace nbts {

Rational make_rational(Int numerator, Int denominator) {
  if (denominator == 0) {
    throw InvalidInput("rational with zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  return Rational(numerator, denominator);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Int parse_integer(std::string_view s, std::string_view full) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ParseError("invalid rational literal '" + std::string(full) + "'");
  }
  Int value{std::string(s)};
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  Int num = parse_integer(text.substr(0, slash), text);
  std::string_view den_part = text.substr(slash + 1);
  if (!all_digits(den_part)) {
    throw ParseError("invalid rational literal '" + std::string(text) + "'");
  }
  Int den{std::string(den_part)};
  if (den == 0) {
    throw ParseError("zero denominator in rational literal '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

double approx(const Rational& value) { return value.convert_to<double>(); }

}  // namespace nbts
