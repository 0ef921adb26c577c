#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qgl1 {

/// Exact rational scalar. Backed by GMP; always held in canonical form
/// (lowest terms, positive denominator). No floating point is used in any
/// core computation; doubles appear only in clearly marked approximate
/// output columns.
using Rational = mpq_class;

/// 1-based coordinate / basis index.
using Index = std::int64_t;

/// Builds a canonical rational from an integer pair. den must be nonzero.
Rational make_rational(long num, long den = 1);

/// Parses the exact grammar `-?digits(/digits)?`. Rejects whitespace,
/// leading '+', empty strings and zero denominators.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1. Inverse of
/// parse_rational on canonical output.
std::string to_string(const Rational& value);

/// Nearest double, for approximate report columns only.
double to_double(const Rational& value);

/// True if the value is in lowest terms with positive denominator.
bool is_canonical(const Rational& value);

}  // namespace qgl1
