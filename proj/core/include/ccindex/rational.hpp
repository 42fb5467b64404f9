#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ccindex {

// Arbitrary-precision integer used for every coefficient and swing count.
using BigInt = boost::multiprecision::cpp_int;

// Exact rational; boost keeps it normalized (gcd 1, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(std::uint64_t n);

// 2^n as an exact integer.
BigInt power_of_two(std::uint64_t n);

/// Renders `value` with exactly `precision` digits after the decimal point,
/// rounding half to even. A precision of 0 yields an integer string.
std::string to_decimal(const Rational& value, int precision);

/// "num/den", or just "num" when the denominator is 1.
std::string to_fraction(const Rational& value);

/// Parses a plain decimal string ("0.125", "-3", "12.") into an exact rational.
Rational parse_decimal(const std::string& text);

}  // namespace ccindex
