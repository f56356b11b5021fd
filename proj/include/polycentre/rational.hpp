#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace polycentre {

/// Exact rational scalar. GMP keeps values in canonical form (reduced
/// fraction, positive denominator) as long as every value is constructed
/// through the helpers below.
using Rational = mpq_class;

/// Builds a canonical rational from an integer pair. Throws
/// std::invalid_argument when den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p", "p/q" or a plain decimal-free integer string into a canonical
/// rational. Returns std::nullopt on malformed input or zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Serializes as "p" or "p/q" (q > 1), matching the wire format used by the
/// CLI and report documents.
std::string to_string(const Rational& value);

inline Rational rational_abs(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

inline int rational_sign(const Rational& value) { return sgn(value); }

}  // namespace polycentre
