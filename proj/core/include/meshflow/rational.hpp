#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace meshflow {

/// Exact arbitrary-precision rational. All throughput and schedule arithmetic
/// is exact; rounding happens only at display time.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "11" for integers, "p/q" otherwise.
std::string to_fraction(const Rational& x);

/// Fixed three-decimal display, round half up: 22/7 -> "3.143".
std::string format_fixed3(const Rational& x);

/// Parse "p", "p/q" or a plain decimal like "5.5" into an exact rational.
Rational rational_from_string(const std::string& text);

}  // namespace meshflow
