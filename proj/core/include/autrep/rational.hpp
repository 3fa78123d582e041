#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace autrep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse a rational from the CLI entry grammar: "7", "-3/2".
Rational parse_rational(const std::string& s);

std::string format_rational(const Rational& a);

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

/// a^k for integer k (k < 0 requires a != 0).
Rational rat_pow(const Rational& a, long long k);

}  // namespace autrep
