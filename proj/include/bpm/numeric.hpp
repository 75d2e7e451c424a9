#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace bpm {

// 50 significant decimal digits; used wherever a result is certified.
using HighFloat = boost::multiprecision::cpp_bin_float_50;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p". Floats are rejected.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

// log2 of a positive rational, accurate to double precision even when the
// value underflows binary64.
double log2_rational(const Rational& r);

HighFloat to_high(const Rational& r);
// Exact: every binary float is a dyadic rational.
Rational to_rational(const HighFloat& x);

}  // namespace bpm
