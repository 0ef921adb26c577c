#pragma once

#include <optional>
#include <vector>

#include "qgl1/sparse.hpp"

namespace qgl1 {

/// The tree-structured basic sequence of l1 and its dual functional
/// representatives. Basis vector i couples tree node i to its two children
/// 2i+1 and 2i+2 with weight -1/2; the dual representative of node i places
/// halving weights along the path from i back to a root.

/// x_i = e_i - (e_{2i+1} + e_{2i+2}) / 2.
SparseVec basis_vector(Index i);

/// The unique i with j in {2i+1, 2i+2}; nothing for the roots j = 1, 2.
std::optional<Index> parent(Index j);

/// Strictly decreasing index path produced by the recursion
/// a(1) = i, a(j) = a(j-1) - (floor(a(j-1)/2) + 1), stopping before 0.
/// Each step moves a node to its parent, so the path ends at a root.
struct AlphaChain {
  std::vector<Index> entries;
};

AlphaChain alpha_chain(Index i);

/// Dual representative y_i: coordinate a(j) of the chain carries 2^{-(j-1)}.
SparseVec dual_vector(Index i);

/// Tree depth: level 1 = {1, 2}, level l = {2^l - 1, ..., 2^{l+1} - 2}.
/// Computed by walking the parent recursion, which is what makes it equal
/// to the chain length.
int level(Index i);

/// Realizes sum_i a_i x_i in unit-vector coordinates.
SparseVec expand(const CoeffMap& coeffs);

/// Number of indices in levels 1..n, i.e. 2^{n+1} - 2.
Index level_block_end(int n);

/// The level-halving weight vector: a_i = 2^{1-level(i)} on the support
/// {1..2^{n+1}-2}, so levels carry weights 1, 1/2, 1/4, ... Expanding it
/// cancels every internal coordinate, which is what makes it the extremal
/// input for the dual-growth and conditionality computations.
CoeffMap level_weights(int n);

/// Recovers basis coefficients of v from the dual pairings for i <= n and
/// certifies the result by re-expansion. Throws Error("NotInSpan") when v
/// does not lie in span{x_1..x_n}.
CoeffMap analyze(const SparseVec& v, Index n);

}  // namespace qgl1
