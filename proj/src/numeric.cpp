#include "bpm/numeric.hpp"

#include <cctype>
#include <cmath>

#include "bpm/error.hpp"

namespace bpm {

namespace {

using boost::multiprecision::cpp_int;

bool is_integer_text(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start >= s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

double log2_integer(const cpp_int& v) {
  const auto bits = static_cast<long>(boost::multiprecision::msb(v));
  if (bits < 60) return std::log2(v.convert_to<double>());
  const cpp_int top = v >> (bits - 60);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 60);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den))
    throw Error(ErrorCode::ParseError, "expected a rational literal p/q, got '" + text + "'");
  const cpp_int d(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  return Rational(cpp_int(num), d);
}

std::string format_rational(const Rational& r) {
  const cpp_int den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

double log2_rational(const Rational& r) {
  if (r <= 0) throw Error(ErrorCode::DomainError, "log2 of a non-positive rational");
  return log2_integer(numerator(r)) - log2_integer(denominator(r));
}

HighFloat to_high(const Rational& r) {
  return HighFloat(numerator(r)) / HighFloat(denominator(r));
}

Rational to_rational(const HighFloat& x) {
  if (x == 0) return 0;
  int exponent = 0;
  HighFloat mantissa = boost::multiprecision::frexp(x, &exponent);
  // Scale the mantissa to an integer; cpp_bin_float_50 carries < 200 bits.
  mantissa = boost::multiprecision::ldexp(mantissa, 200);
  const cpp_int whole = mantissa.convert_to<cpp_int>();
  exponent -= 200;
  if (exponent >= 0) return Rational(whole << exponent);
  return Rational(whole, cpp_int(1) << -exponent);
}

}  // namespace bpm
