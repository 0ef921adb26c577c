#include "qgl1/dual_bounds.hpp"

#include <algorithm>
#include <string>

namespace qgl1 {

Rational alternating_dual_norm(int n) {
  Index end = level_block_end(n);
  SparseVecBuilder builder;
  for (Index i = 1; i <= end; ++i) {
    Rational sign(i % 2 == 0 ? 1 : -1);
    SparseVec dual = dual_vector(i);
    for (const auto& [j, value] : dual.entries()) {
      builder.add(j, sign * value);
    }
  }
  return sup_norm(builder.build());
}

SparseVec z_vector(int n) { return expand(level_weights(n)); }

GrowthRow dual_sum_lower_bound(int n) {
  GrowthRow row;
  row.n = n;
  row.m_end = level_block_end(n);
  row.alt_norm = alternating_dual_norm(n);
  CoeffMap weights = level_weights(n);
  row.witness_norm = l1_norm(z_vector(n));
  Rational pairing_total(0);
  for (const auto& [i, a] : weights.entries()) pairing_total += a;
  row.pairing = pairing_total;
  row.lower_bound = row.pairing / row.witness_norm;
  return row;
}

std::vector<GrowthRow> growth_table(int n_max) {
  if (n_max < 1) {
    throw Error("InvalidArgument", "growth_table requires n_max >= 1");
  }
  if (n_max > kGrowthCap) {
    throw Error("TooLarge", "n_max = " + std::to_string(n_max) + " exceeds the cap " +
                                std::to_string(kGrowthCap));
  }
  std::vector<GrowthRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) rows.push_back(dual_sum_lower_bound(n));
  return rows;
}

Rational dual_norm_upper(const CoeffMap& c) {
  SparseVecBuilder builder;
  for (const auto& [i, value] : c.entries()) {
    SparseVec dual = dual_vector(i);
    for (const auto& [j, weight] : dual.entries()) {
      builder.add(j, value * weight);
    }
  }
  return sup_norm(builder.build());
}

Rational dual_norm_lower(const CoeffMap& c, std::span<const CoeffMap> witnesses) {
  Rational best(0);
  bool usable = false;
  for (const CoeffMap& w : witnesses) {
    if (w.empty()) continue;
    usable = true;
    Rational num(0);
    for (const auto& [i, wi] : w.entries()) num += c.at(i) * wi;
    Rational value = abs(num) / l1_norm(expand(w));
    if (value > best) best = value;
  }
  if (!usable) {
    throw Error("EmptyWitnessList", "dual_norm_lower needs at least one nonempty witness");
  }
  return best;
}

std::vector<CoeffMap> default_dual_witnesses(Index max_basis_index) {
  if (max_basis_index < 1) {
    throw Error("InvalidArgument", "max_basis_index must be positive");
  }
  std::vector<CoeffMap> witnesses;
  for (int n = 1; level_block_end(n) <= max_basis_index; ++n) {
    witnesses.push_back(level_weights(n));
  }
  for (Index i = 1; i <= max_basis_index; ++i) {
    witnesses.push_back(CoeffMap::from_entries({{i, Rational(1)}}));
  }
  return witnesses;
}

namespace {

// Unique null direction of the given rows of the expansion matrix on
// span{x_1..x_n}, when the rows have rank n-1; empty otherwise.
std::vector<Rational> null_direction(const std::vector<std::vector<Rational>>& rows, int n) {
  std::vector<std::vector<Rational>> mat = rows;
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (int col = 0; col < n && row < mat.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < mat.size() && mat[pivot][col] == 0) ++pivot;
    if (pivot == mat.size()) continue;
    std::swap(mat[row], mat[pivot]);
    Rational inv = mat[row][col];
    for (int j = col; j < n; ++j) mat[row][j] /= inv;
    for (std::size_t r = 0; r < mat.size(); ++r) {
      if (r == row || mat[r][col] == 0) continue;
      Rational factor = mat[r][col];
      for (int j = col; j < n; ++j) mat[r][j] -= factor * mat[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() != rows.size()) return {};  // rank below n-1

  std::vector<bool> is_pivot(n, false);
  for (int col : pivot_col) is_pivot[col] = true;
  int free_col = -1;
  for (int col = 0; col < n; ++col) {
    if (!is_pivot[col]) {
      free_col = col;
      break;
    }
  }
  std::vector<Rational> d(n, Rational(0));
  d[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    d[pivot_col[r]] = -mat[r][free_col];
  }
  return d;
}

}  // namespace

Rational dual_norm_exact_fn(const CoeffMap& c, int n) {
  if (n < 1) {
    throw Error("InvalidArgument", "dual_norm_exact_fn requires n >= 1");
  }
  if (n > kExactDualCap) {
    throw Error("TooLarge", "n = " + std::to_string(n) + " exceeds the vertex-enumeration cap " +
                                std::to_string(kExactDualCap));
  }
  if (!c.empty() && c.max_index() > n) {
    throw Error("InvalidArgument", "coefficient support exceeds the span bound");
  }

  const int coord_rows = 2 * n + 2;
  std::vector<std::vector<Rational>> matrix(
      static_cast<std::size_t>(coord_rows), std::vector<Rational>(n, Rational(0)));
  for (Index i = 1; i <= n; ++i) {
    SparseVec column = basis_vector(i);
    for (const auto& [j, value] : column.entries()) {
      matrix[static_cast<std::size_t>(j - 1)][i - 1] = value;
    }
  }

  Rational best(0);
  std::vector<int> pick(static_cast<std::size_t>(n - 1));
  for (int j = 0; j < n - 1; ++j) pick[static_cast<std::size_t>(j)] = j;
  while (true) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(pick.size());
    for (int r : pick) rows.push_back(matrix[static_cast<std::size_t>(r)]);
    std::vector<Rational> d = null_direction(rows, n);
    if (!d.empty()) {
      std::vector<CoeffMap::Entry> entries;
      for (int i = 0; i < n; ++i) {
        if (d[static_cast<std::size_t>(i)] != 0) {
          entries.emplace_back(i + 1, d[static_cast<std::size_t>(i)]);
        }
      }
      CoeffMap direction = CoeffMap::from_entries(std::move(entries));
      Rational scale = l1_norm(expand(direction));
      Rational value(0);
      for (const auto& [i, di] : direction.entries()) value += c.at(i) * di;
      value = abs(value) / scale;
      if (value > best) best = value;
    }
    // Next combination of coordinate rows.
    if (pick.empty()) break;
    int j = static_cast<int>(pick.size());
    while (j > 0 && pick[static_cast<std::size_t>(j - 1)] ==
                        coord_rows - static_cast<int>(pick.size()) + (j - 1)) {
      --j;
    }
    if (j == 0) break;
    ++pick[static_cast<std::size_t>(j - 1)];
    for (std::size_t l = static_cast<std::size_t>(j); l < pick.size(); ++l) {
      pick[l] = pick[l - 1] + 1;
    }
  }
  return best;
}

}  // namespace qgl1
