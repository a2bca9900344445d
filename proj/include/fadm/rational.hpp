#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fadm {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Parses an exact rational from decimal or fraction text: "3", "-0.25",
/// "1e-3", "2/7". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Exact conversion of a finite binary double.
Rational rational_from_double(double value);

/// "num/den" with den > 0, e.g. "2/1".
std::string rational_to_string(const Rational& q);

}  // namespace fadm
