#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qsuper {

/// Exact rational number used for coefficients, q-exponents and Gram entries.
using Rational = mpq_class;

/// Parses "p/q" or a plain integer (optional leading sign, no spaces).
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// True when numerator and denominator are coprime with a positive denominator.
bool is_canonical(const Rational& value);

}  // namespace qsuper
