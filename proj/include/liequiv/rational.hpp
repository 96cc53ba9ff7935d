#ifndef LIEQUIV_RATIONAL_HPP
#define LIEQUIV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace liequiv {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading '-' or '+', decimal digits only).
/// Throws InvalidArgument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Nearest double, ties to even.
double to_double(const Rational& value);

int sign(const Rational& value);

using RationalVector = std::vector<Rational>;

}  // namespace liequiv

#endif
