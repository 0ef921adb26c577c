#include "qgl1/lindenstrauss.hpp"

#include <string>

namespace qgl1 {

namespace {

void require_positive(Index i, const char* what) {
  if (i < 1) {
    throw Error("IndexOutOfRange",
                std::string(what) + " requires a positive index, got " + std::to_string(i));
  }
}

const Rational kHalf(1, 2);

}  // namespace

SparseVec basis_vector(Index i) {
  require_positive(i, "basis_vector");
  return SparseVec::from_entries(
      {{i, Rational(1)}, {2 * i + 1, -kHalf}, {2 * i + 2, -kHalf}});
}

std::optional<Index> parent(Index j) {
  require_positive(j, "parent");
  if (j <= 2) return std::nullopt;
  return (j - 1) / 2;
}

AlphaChain alpha_chain(Index i) {
  require_positive(i, "alpha_chain");
  AlphaChain chain;
  Index current = i;
  while (current > 0) {
    chain.entries.push_back(current);
    current = current - (current / 2 + 1);
  }
  return chain;
}

SparseVec dual_vector(Index i) {
  AlphaChain chain = alpha_chain(i);
  std::vector<SparseVec::Entry> entries;
  entries.reserve(chain.entries.size());
  Rational weight(1);
  for (Index node : chain.entries) {
    entries.emplace_back(node, weight);
    weight /= 2;
  }
  return SparseVec::from_entries(std::move(entries));
}

int level(Index i) {
  require_positive(i, "level");
  int depth = 1;
  for (auto up = parent(i); up; up = parent(*up)) ++depth;
  return depth;
}

SparseVec expand(const CoeffMap& coeffs) {
  SparseVecBuilder builder;
  builder.reserve(3 * coeffs.size());
  for (const auto& [i, a] : coeffs.entries()) {
    Rational half = a * kHalf;
    builder.add(i, a);
    builder.add(2 * i + 1, -half);
    builder.add(2 * i + 2, -half);
  }
  return builder.build();
}

Index level_block_end(int n) {
  if (n < 1 || n > 60) {
    throw Error("InvalidArgument", "level count must be in [1, 60], got " + std::to_string(n));
  }
  return (Index(1) << (n + 1)) - 2;
}

CoeffMap level_weights(int n) {
  Index end = level_block_end(n);
  CoeffMapBuilder builder;
  builder.reserve(static_cast<std::size_t>(end));
  Rational weight(1);
  for (int l = 1; l <= n; ++l) {
    Index first = (Index(1) << l) - 1;
    Index last = (Index(1) << (l + 1)) - 2;
    for (Index i = first; i <= last; ++i) builder.add(i, weight);
    weight /= 2;
  }
  return builder.build();
}

CoeffMap analyze(const SparseVec& v, Index n) {
  require_positive(n, "analyze");
  CoeffMapBuilder builder;
  for (Index i = 1; i <= n; ++i) {
    Rational a = pairing(dual_vector(i), v);
    if (a != 0) builder.add(i, std::move(a));
  }
  CoeffMap coeffs = builder.build();
  if (expand(coeffs) != v) {
    throw Error("NotInSpan",
                "vector is not in the span of the first " + std::to_string(n) +
                    " basis vectors");
  }
  return coeffs;
}

}  // namespace qgl1
