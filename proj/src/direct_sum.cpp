#include "qgl1/direct_sum.hpp"

#include <algorithm>
#include <cmath>

#include "qgl1/lindenstrauss.hpp"

namespace qgl1 {

DSVec DSVec::from_blocks(std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.first < b.first; });
  DSVec out;
  out.blocks_.reserve(blocks.size());
  for (auto& [n, coeffs] : blocks) {
    if (n < 1) {
      throw Error("IndexOutOfRange", "block index " + std::to_string(n) + " is not positive");
    }
    if (!out.blocks_.empty() && out.blocks_.back().first == n) {
      throw Error("IndexOutOfRange", "duplicate block index " + std::to_string(n));
    }
    if (coeffs.empty()) continue;
    if (coeffs.max_index() > n) {
      throw Error("InnerIndexOutOfRange",
                  "block " + std::to_string(n) + " holds coefficient index " +
                      std::to_string(coeffs.max_index()) + " beyond its bound");
    }
    out.blocks_.emplace_back(n, std::move(coeffs));
  }
  return out;
}

std::size_t DSVec::support_size() const {
  std::size_t total = 0;
  for (const auto& [n, coeffs] : blocks_) total += coeffs.size();
  return total;
}

Rational ds_norm(const DSVec& y) {
  Rational total(0);
  for (const auto& [n, coeffs] : y.blocks()) total += l1_norm(expand(coeffs));
  return total;
}

DSGreedyResult ds_greedy(const DSVec& y, std::size_t m) {
  if (m > y.support_size()) {
    throw Error("MTooLarge", "m = " + std::to_string(m) + " exceeds the total support " +
                                 std::to_string(y.support_size()));
  }
  struct Item {
    Rational modulus;
    Index block;
    Index inner;
  };
  std::vector<Item> items;
  items.reserve(y.support_size());
  for (const auto& [n, coeffs] : y.blocks()) {
    for (const auto& [i, a] : coeffs.entries()) items.push_back({abs(a), n, i});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    int c = cmp(a.modulus, b.modulus);
    if (c != 0) return c > 0;
    if (a.block != b.block) return a.block < b.block;
    return a.inner < b.inner;
  });

  std::vector<std::pair<Index, std::vector<CoeffMap::Entry>>> kept;
  for (std::size_t j = 0; j < m; ++j) {
    const Item& item = items[j];
    auto it = std::find_if(kept.begin(), kept.end(),
                           [&](const auto& b) { return b.first == item.block; });
    if (it == kept.end()) {
      kept.emplace_back(item.block, std::vector<CoeffMap::Entry>{});
      it = std::prev(kept.end());
    }
    const CoeffMap* source = nullptr;
    for (const auto& [n, coeffs] : y.blocks()) {
      if (n == item.block) source = &coeffs;
    }
    it->second.emplace_back(item.inner, source->at(item.inner));
  }

  DSGreedyResult result;
  std::vector<DSVec::Block> blocks;
  blocks.reserve(kept.size());
  for (auto& [n, entries] : kept) {
    result.block_counts.emplace_back(n, entries.size());
    blocks.emplace_back(n, CoeffMap::from_entries(std::move(entries)));
  }
  std::sort(result.block_counts.begin(), result.block_counts.end());
  result.kept = DSVec::from_blocks(std::move(blocks));
  return result;
}

Rational ds_qg_ratio(const DSVec& y, std::size_t m) {
  if (y.empty()) {
    throw Error("EmptyCoeffMap", "ds_qg_ratio requires a nonempty vector");
  }
  return ds_norm(ds_greedy(y, m).kept) / ds_norm(y);
}

namespace {

// Keeps block * (block + 1) / 2 well inside the Index range.
constexpr Index kFlattenBlockCap = Index(1) << 31;

}  // namespace

Index flatten(const GlobalIndex& g) {
  if (g.block < 1 || g.inner < 1 || g.inner > g.block) {
    throw Error("IndexOutOfRange", "malformed global index (" + std::to_string(g.block) +
                                       ", " + std::to_string(g.inner) + ")");
  }
  if (g.block >= kFlattenBlockCap) {
    throw Error("IndexOutOfRange", "block index " + std::to_string(g.block) + " too large");
  }
  return g.block * (g.block - 1) / 2 + g.inner;
}

GlobalIndex unflatten(Index flat) {
  if (flat < 1 || flat >= kFlattenBlockCap * (kFlattenBlockCap - 1) / 2) {
    throw Error("IndexOutOfRange", "flat index " + std::to_string(flat) + " out of range");
  }
  // Integer square-root estimate of the block, then exact correction.
  Index block = static_cast<Index>((std::sqrt(8.0 * static_cast<double>(flat) + 1.0) - 1.0) / 2.0);
  block = std::max<Index>(block, 1);
  while (block * (block + 1) / 2 < flat) ++block;
  while (block > 1 && (block - 1) * block / 2 >= flat) --block;
  return GlobalIndex{block, flat - block * (block - 1) / 2};
}

}  // namespace qgl1
