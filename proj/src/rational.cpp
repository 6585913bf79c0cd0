#include "ribbon/rational.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <regex>

#include "ribbon/error.hpp"

namespace ribbon {

namespace {

using boost::multiprecision::mpz_int;

[[noreturn]] void non_canonical(std::string_view text, const char* why) {
  throw Error(ErrorCode::NonCanonicalRational,
              "rational '" + std::string(text) + "' is not canonical: " + why);
}

// Decimal scientific notation as produced by std::to_chars.
Rational parse_decimal(const std::string& text) {
  std::string mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    exponent = std::stol(text.substr(e + 1));
  }
  bool negative = !mantissa.empty() && mantissa.front() == '-';
  if (negative) mantissa.erase(0, 1);
  std::string digits;
  for (char c : mantissa)
    if (c != '.') digits.push_back(c);
  // GMP reads a leading 0 as an octal prefix
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  if (auto dot = mantissa.find('.'); dot != std::string::npos)
    exponent -= static_cast<long>(mantissa.size() - dot - 1);

  mpz_int num(digits);
  mpz_int scale = 1;
  for (long i = 0; i < std::labs(exponent); ++i) scale *= 10;
  Rational result = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
  return negative ? Rational(-result) : result;
}

}  // namespace

std::string to_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^(-?)(0|[1-9][0-9]*)/([1-9][0-9]*)$)");
  std::string owned(text);
  std::smatch match;
  if (!std::regex_match(owned, match, pattern))
    non_canonical(text, "expected \"num/den\" with a positive denominator");
  mpz_int num(match[2].str());
  mpz_int den(match[3].str());
  if (num == 0 && (den != 1 || !match[1].str().empty()))
    non_canonical(text, "zero must be written \"0/1\"");
  if (gcd(num, den) != 1) non_canonical(text, "fraction is not reduced");
  Rational value(num, den);
  return match[1].str().empty() ? value : Rational(-value);
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value))
    throw Error(ErrorCode::NonCanonicalRational, "non-finite coordinate");
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  std::string shortest(buffer, end);
  Rational decimal = parse_decimal(shortest);
  Rational exact(value);
  if (decimal != exact)
    throw Error(ErrorCode::NonCanonicalRational,
                "number " + shortest + " is not exactly representable; write it as \"num/den\"");
  return exact;
}

Rational sqrt_lower_bound(const Rational& value, long denominator) {
  if (value <= 0) return Rational(0);
  const long long den = denominator;
  auto k = static_cast<long long>(std::floor(std::sqrt(to_double(value)) * den));
  auto square = [den](long long n) {
    Rational r(n, den);
    return Rational(r * r);
  };
  while (k > 0 && square(k) > value) --k;
  while (square(k + 1) <= value) ++k;
  return Rational(k, den);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace ribbon
