#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace catlevy {

/// Exact rational scalar used for every matrix entry, weight and moment.
using Rational = mpq_class;

/// Canonical "p/q" (or "p" when q = 1) rendering.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace catlevy
