#include "ccindex/rational.hpp"

#include <cctype>
#include <string>

#include "ccindex/error.hpp"

namespace ccindex {

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t k = 2; k <= n; ++k) result *= k;
  return result;
}

BigInt power_of_two(std::uint64_t n) {
  BigInt result = 1;
  result <<= n;
  return result;
}

std::string to_decimal(const Rational& value, int precision) {
  if (precision < 0) throw Error(ErrorCode::InvalidArgument, "negative precision");

  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;

  BigInt scale = 1;
  for (int d = 0; d < precision; ++d) scale *= 10;

  BigInt scaled = num * scale;
  BigInt quotient = scaled / den;
  const BigInt twice_rem = 2 * (scaled - quotient * den);
  if (twice_rem > den || (twice_rem == den && (quotient & 1) != 0)) ++quotient;

  std::string digits = quotient.str();
  if (precision > 0) {
    if (digits.size() <= static_cast<std::size_t>(precision)) {
      digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(precision), ".");
  }
  if (negative && quotient != 0) digits.insert(0, "-");
  return digits;
}

std::string to_fraction(const Rational& value) {
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

Rational parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt num = 0;
  BigInt den = 1;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::ParseError, "not a decimal number: '" + text + "'");
    }
    seen_digit = true;
    num = num * 10 + (ch - '0');
    if (seen_point) den *= 10;
  }
  if (!seen_digit) throw Error(ErrorCode::ParseError, "not a decimal number: '" + text + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace ccindex
