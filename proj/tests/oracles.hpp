#pragma once

// Test-only reference implementations, kept deliberately naive and separate
// from the library code paths they check.

#include <map>

#include "qgl1/lindenstrauss.hpp"
#include "qgl1/rng.hpp"
#include "qgl1/sparse.hpp"

namespace qgl1::testing {

using RationalMap = std::map<Index, Rational>;

inline RationalMap to_map(const SparseVec& v) {
  RationalMap out;
  for (const auto& [index, value] : v.entries()) out[index] = value;
  return out;
}

// Expands a coefficient map by literally accumulating scaled basis vectors
// into an ordered map.
inline RationalMap naive_expand(const CoeffMap& coeffs) {
  RationalMap out;
  for (const auto& [i, a] : coeffs.entries()) {
    out[i] += a;
    out[2 * i + 1] += a * Rational(-1, 2);
    out[2 * i + 2] += a * Rational(-1, 2);
  }
  for (auto it = out.begin(); it != out.end();) {
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  }
  return out;
}

inline Rational naive_l1(const RationalMap& v) {
  Rational total(0);
  for (const auto& [index, value] : v) total += abs(value);
  return total;
}

inline Rational naive_sup(const RationalMap& v) {
  Rational best(0);
  for (const auto& [index, value] : v) {
    Rational a = abs(value);
    if (a > best) best = a;
  }
  return best;
}

inline Rational naive_expanded_l1(const CoeffMap& coeffs) {
  return naive_l1(naive_expand(coeffs));
}

// Small random rationals (possibly zero) for property tests.
inline Rational random_rational(Rng& rng) {
  long num = static_cast<long>(rng.below(21)) - 10;
  long den = 1 + static_cast<long>(rng.below(6));
  return make_rational(num, den);
}

inline SparseVec random_sparse_vec(Rng& rng, Index max_index, std::size_t max_size) {
  std::vector<SparseVec::Entry> entries;
  std::size_t size = rng.below(max_size + 1);
  for (std::size_t j = 0; j < size; ++j) {
    entries.emplace_back(static_cast<Index>(1 + rng.below(max_index)), random_rational(rng));
  }
  return SparseVec::from_entries(std::move(entries));
}

inline CoeffMap random_coeffs(Rng& rng, Index max_index, std::size_t max_size) {
  std::vector<CoeffMap::Entry> entries;
  std::size_t size = rng.below(max_size + 1);
  for (std::size_t j = 0; j < size; ++j) {
    entries.emplace_back(static_cast<Index>(1 + rng.below(max_index)), random_rational(rng));
  }
  return CoeffMap::from_entries(std::move(entries));
}

}  // namespace qgl1::testing
