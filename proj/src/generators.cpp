#include "qgl1/generators.hpp"

namespace qgl1 {

CoeffMap random_coeff_map(Rng& rng, Index max_index, std::size_t max_size,
                          std::span<const Rational> grid) {
  if (max_index < 1 || grid.empty()) {
    throw Error("InvalidArgument", "random_coeff_map needs a positive range and a grid");
  }
  std::size_t size = static_cast<std::size_t>(
      rng.below(std::min<std::uint64_t>(max_size, static_cast<std::uint64_t>(max_index)) + 1));
  std::vector<Index> support = rng.sample_distinct(size, static_cast<std::uint64_t>(max_index));
  std::vector<CoeffMap::Entry> entries;
  entries.reserve(size);
  for (Index i : support) entries.emplace_back(i, grid[rng.below(grid.size())]);
  return CoeffMap::from_entries(std::move(entries));
}

DSVec random_ds_vec(Rng& rng, std::size_t max_blocks, Index max_block_index,
                    std::span<const Rational> grid) {
  if (max_block_index < 1 || grid.empty()) {
    throw Error("InvalidArgument", "random_ds_vec needs a positive range and a grid");
  }
  std::size_t count = static_cast<std::size_t>(rng.below(
      std::min<std::uint64_t>(max_blocks, static_cast<std::uint64_t>(max_block_index)) + 1));
  std::vector<Index> block_indices =
      rng.sample_distinct(count, static_cast<std::uint64_t>(max_block_index));
  std::vector<DSVec::Block> blocks;
  blocks.reserve(count);
  for (Index n : block_indices) {
    blocks.emplace_back(
        n, random_coeff_map(rng, n, static_cast<std::size_t>(n), grid));
  }
  return DSVec::from_blocks(std::move(blocks));
}

}  // namespace qgl1
