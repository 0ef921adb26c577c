#pragma once

#include <vector>

#include "qgl1/greedy.hpp"
#include "qgl1/sparse.hpp"

namespace qgl1 {

/// The l1 direct sum of the spans F_n of the first n basis vectors. An
/// element is a finite family of blocks; block n holds a coefficient map
/// supported on {1..n}, and the norm is the sum of the block norms after
/// expansion. Empty blocks are never stored.
class DSVec {
 public:
  using Block = std::pair<Index, CoeffMap>;

  DSVec() = default;

  /// Throws Error("InnerIndexOutOfRange") when a block's support exceeds
  /// its block index, and Error("IndexOutOfRange") for block indices < 1.
  static DSVec from_blocks(std::vector<Block> blocks);

  std::span<const Block> blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }

  /// Total number of stored coefficients across blocks.
  std::size_t support_size() const;

  friend bool operator==(const DSVec&, const DSVec&) = default;

 private:
  std::vector<Block> blocks_;
};

/// Sum over blocks of the expanded block l1 norm.
Rational ds_norm(const DSVec& y);

struct DSGreedyResult {
  DSVec kept;
  /// Induced per-block selection sizes k(i), ascending by block; the sizes
  /// sum to m.
  std::vector<std::pair<Index, std::size_t>> block_counts;
};

/// Keeps the m globally largest |coefficients| across all blocks, breaking
/// ties by smaller block then smaller inner index. Throws
/// Error("MTooLarge") when m exceeds the total support.
DSGreedyResult ds_greedy(const DSVec& y, std::size_t m);

/// ds_norm(ds_greedy(y, m)) / ds_norm(y); y must be nonempty.
Rational ds_qg_ratio(const DSVec& y, std::size_t m);

/// Position of a block/inner coordinate in the diagonal enumeration
/// (1,1), (2,1), (2,2), (3,1), ...
struct GlobalIndex {
  Index block = 0;
  Index inner = 0;
};

Index flatten(const GlobalIndex& g);
GlobalIndex unflatten(Index flat);

}  // namespace qgl1
