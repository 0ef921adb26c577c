#pragma once

#include <cstdint>
#include <vector>

#include "qgl1/lindenstrauss.hpp"
#include "qgl1/sparse.hpp"

namespace qgl1 {

/// Thresholding greedy machinery. The operator G_m keeps the m coefficients
/// of largest modulus; when moduli tie the kept set is not unique, so the
/// operator is treated as a relation over all valid selections plus one
/// canonical tie-broken function (smaller index wins).

struct GreedySelection {
  std::vector<Index> indices;  // ascending
  bool canonical = false;
};

struct GreedySets {
  GreedySelection canonical;
  /// Number of valid selections (saturates at UINT64_MAX on overflow).
  std::uint64_t count = 0;
  /// Every valid selection, ascending-lexicographic; filled only when
  /// count <= the enumeration cap passed to greedy_sets.
  std::vector<GreedySelection> all;
  bool enumerated = false;
};

inline constexpr std::size_t kDefaultSelectionCap = 64;

/// All size-m selections whose moduli dominate the complement. Throws
/// Error("MTooLarge") when m exceeds the support size.
GreedySets greedy_sets(const CoeffMap& coeffs, std::size_t m,
                       std::size_t enum_cap = kDefaultSelectionCap);

/// Restriction of the coefficients to a selection, after checking the
/// threshold property. Throws Error("InvalidSelection") otherwise.
CoeffMap greedy_operator(const CoeffMap& coeffs, std::size_t m,
                         const GreedySelection& selection);

/// max over valid selections of ||expand(G_m a)|| / ||expand(a)||. Norms are
/// always taken after expansion to unit-vector coordinates; the basis is
/// conditional, so no coefficient-space shortcut is sound. When the number
/// of tied selections exceeds enum_cap only the canonical one is measured.
Rational qg_ratio(const CoeffMap& coeffs, std::size_t m,
                  std::size_t enum_cap = kDefaultSelectionCap);

struct QGSearchConfig {
  Index max_index = 6;
  std::size_t support_size = 6;
  std::vector<Rational> grid;  // candidate coefficients; zeros are dropped
  std::uint64_t trials = 0;    // 0 = exhaustive over supports and grid
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct QGWitness {
  CoeffMap coeffs;
  std::size_t m = 0;
  GreedySelection selection;
};

struct QGReport {
  Rational ratio;
  QGWitness witness;
  Rational bound;  // the certified ceiling, 3
};

/// Best observed ratio with its witness. Deterministic for a fixed config
/// (including across thread counts): ties are broken by the lexicographically
/// smallest serialized witness.
QGReport qg_lower_bound_search(const QGSearchConfig& config);

struct UccReport {
  std::size_t m = 0;
  Rational c_min;
  Rational c_max;
  std::vector<int> min_pattern;  // signs, first entry fixed at +1
  std::vector<int> max_pattern;
  Rational base_norm;  // ||sum of the first m basis vectors||
};

inline constexpr std::size_t kUccCap = 20;

/// Exhaustive constants for sign-flipped constant-coefficient sums
/// sum eps_i x_i over i <= m, modulo a global flip. Throws
/// Error("TooLarge") beyond the cap.
UccReport ucc_constants(std::size_t m);

struct ConditionalityWitness {
  int n = 0;
  std::vector<int> signs;  // eps_i = (-1)^level(i) for i <= 2^{n+1} - 2
  Rational flipped_norm;
  Rational base_norm;
  Rational ratio;
};

/// Level-alternating sign flip of the level-halving weight vector. The
/// ratio grows without bound in n, witnessing that the basis is conditional.
ConditionalityWitness conditionality_witness(int n);

}  // namespace qgl1
