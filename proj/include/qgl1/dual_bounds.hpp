#pragma once

#include <vector>

#include "qgl1/lindenstrauss.hpp"
#include "qgl1/sparse.hpp"

namespace qgl1 {

/// Norm analysis of the dual functionals. The exact quotient norm of a
/// combination sum c_i x_i* lives in an infinite-dimensional dual, so this
/// module reports a sandwich instead: any concrete representative bounds it
/// from above in sup norm, and any witness vector in the span bounds it
/// from below through the pairing. The growth table shows the two bounds
/// pulling apart for the alternating-versus-constant sign choices, which is
/// what certifies that the dual sequence is not quasi-greedy.

/// sup norm of sum_{i=1}^{2^{n+1}-2} (-1)^i y_i. Equals 1 for every n:
/// within each level consecutive duals cancel along shared ancestor paths.
Rational alternating_dual_norm(int n);

/// expand(level_weights(n)): coordinates 1 and 2 carry 1, every internal
/// coordinate cancels, and the 2^{n+1} leaf-child coordinates carry -2^{-n}.
SparseVec z_vector(int n);

struct GrowthRow {
  int n = 0;
  Index m_end = 0;        // 2^{n+1} - 2, the last index summed
  Rational alt_norm;      // stays 1
  Rational witness_norm;  // ||z_n||, stays 4
  Rational pairing;       // <sum of duals, z_n> = sum of weights = 2n
  Rational lower_bound;   // pairing / witness_norm = n / 2
};

/// One row of the growth certificate for sum_{i<=M} x_i*.
GrowthRow dual_sum_lower_bound(int n);

inline constexpr int kGrowthCap = 12;

/// Rows n = 1..n_max. Throws Error("TooLarge") beyond the desk-scale cap;
/// vectors grow like 2^{n+2} coordinates.
std::vector<GrowthRow> growth_table(int n_max);

/// Upper bound: sup norm of the representative sum c_i y_i.
Rational dual_norm_upper(const CoeffMap& c);

/// Lower bound: max over witnesses w of |sum c_i w_i| / ||expand(w)||.
/// Throws Error("EmptyWitnessList") when no usable witness is given.
Rational dual_norm_lower(const CoeffMap& c, std::span<const CoeffMap> witnesses);

/// The built-in witness family: level-halving weight vectors that fit under
/// max_basis_index, plus the single-basis-vector witnesses.
std::vector<CoeffMap> default_dual_witnesses(Index max_basis_index);

inline constexpr int kExactDualCap = 6;

/// Exact dual norm of c restricted to span{x_1..x_n}: the maximum of
/// |sum c_i a_i| over the polytope ||sum a_i x_i|| <= 1, computed by
/// exhaustive vertex enumeration (each vertex is the normalized null
/// direction of n-1 independent coordinate rows). Cross-checks the
/// sandwich at small scale. Throws Error("TooLarge") for n beyond the cap.
Rational dual_norm_exact_fn(const CoeffMap& c, int n);

}  // namespace qgl1
