#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ribbon {

/// Exact rational scalar. GMP keeps every value in canonical form (reduced,
/// positive denominator), so structural equality is value equality.
using Rational = boost::multiprecision::mpq_rational;

/// Formats as "num/den", always with the denominator ("2/1", "-11/20").
std::string to_string(const Rational& value);

/// Parses the canonical "num/den" form. Throws NonCanonicalRational for
/// unreduced fractions, zero or negative denominators, "+" signs, leading
/// zeros or a missing denominator.
Rational parse_rational(std::string_view text);

/// Converts a binary double to a rational when the shortest decimal that
/// round-trips the double denotes the same number exactly (0.25 yes, 0.1 no).
/// Throws NonCanonicalRational otherwise.
Rational rational_from_double(double value);

/// Largest multiple of 1/denominator not exceeding the square root of value.
/// Used for clearance radii that must be rational lower bounds.
Rational sqrt_lower_bound(const Rational& value, long denominator = 1000000);

double to_double(const Rational& value);

}  // namespace ribbon
