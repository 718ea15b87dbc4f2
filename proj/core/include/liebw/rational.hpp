#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace liebw {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

/// Parses "n" or "n/d" (optional leading sign). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace liebw
