#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "qgl1/errors.hpp"
#include "qgl1/rational.hpp"

namespace qgl1 {

/// Finitely supported map index -> nonzero Rational, stored as entries
/// sorted by index. Zero values are never stored, so equality is structural
/// equality of the mathematical object. Indices are 1-based throughout.
///
/// The same container backs two distinct domain types (see the aliases
/// below): unit-vector coordinates and basis coefficients. The tag keeps
/// them from mixing.
template <class Tag>
class FlatMap {
 public:
  using Entry = std::pair<Index, Rational>;

  FlatMap() = default;

  /// Normalizes arbitrary (index, value) pairs: sorts, sums duplicates,
  /// drops zeros. Rejects indices < 1.
  static FlatMap from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    FlatMap out;
    out.entries_.reserve(entries.size());
    for (auto& [index, value] : entries) {
      if (index < 1) {
        throw Error("IndexOutOfRange", "index " + std::to_string(index) + " is not positive");
      }
      if (!out.entries_.empty() && out.entries_.back().first == index) {
        out.entries_.back().second += value;
        if (out.entries_.back().second == 0) out.entries_.pop_back();
      } else if (value != 0) {
        out.entries_.emplace_back(index, std::move(value));
      }
    }
    return out;
  }

  std::span<const Entry> entries() const { return entries_; }

  /// Value at an index, zero when absent.
  Rational at(Index index) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), index,
        [](const Entry& e, Index j) { return e.first < j; });
    if (it != entries_.end() && it->first == index) return it->second;
    return Rational(0);
  }

  bool contains(Index index) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), index,
        [](const Entry& e, Index j) { return e.first < j; });
    return it != entries_.end() && it->first == index;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// Largest index in the support; 0 for the empty map.
  Index max_index() const { return entries_.empty() ? 0 : entries_.back().first; }

  std::vector<Index> support() const {
    std::vector<Index> out;
    out.reserve(entries_.size());
    for (const auto& [index, value] : entries_) out.push_back(index);
    return out;
  }

  friend bool operator==(const FlatMap&, const FlatMap&) = default;

 private:
  std::vector<Entry> entries_;
};

struct CoordTag {};
struct BasisTag {};

/// A vector in unit-vector coordinates (also used for sup-norm functional
/// representatives).
using SparseVec = FlatMap<CoordTag>;

/// A vector written in basis coordinates: basis index i -> coefficient a_i.
/// Note the naming clash resolved here: elsewhere "alpha chain" means the
/// index path used to build dual representatives, while coefficient maps
/// hold the scalar weights a_i. The two never share a type.
using CoeffMap = FlatMap<BasisTag>;

/// Incremental accumulator; build() normalizes like FlatMap::from_entries.
template <class Tag>
class FlatMapBuilder {
 public:
  void add(Index index, Rational value) { buffer_.emplace_back(index, std::move(value)); }
  void reserve(std::size_t n) { buffer_.reserve(n); }
  FlatMap<Tag> build() { return FlatMap<Tag>::from_entries(std::move(buffer_)); }

 private:
  std::vector<typename FlatMap<Tag>::Entry> buffer_;
};

using SparseVecBuilder = FlatMapBuilder<CoordTag>;
using CoeffMapBuilder = FlatMapBuilder<BasisTag>;

/// Sum of absolute coordinate values.
Rational l1_norm(const SparseVec& v);

/// Largest absolute coordinate value, 0 for the empty vector.
Rational sup_norm(const SparseVec& v);

/// Duality pairing sum_j f(j) v(j).
Rational pairing(const SparseVec& f, const SparseVec& v);

/// Exact coordinatewise sum of scaled vectors.
SparseVec linear_combine(std::span<const std::pair<Rational, SparseVec>> terms);

/// Keeps the indices listed in `keep` (P_A), zeroes the rest.
template <class Tag>
FlatMap<Tag> restrict_to(const FlatMap<Tag>& v, std::span<const Index> keep) {
  std::vector<Index> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<typename FlatMap<Tag>::Entry> out;
  for (const auto& [index, value] : v.entries()) {
    if (std::binary_search(sorted.begin(), sorted.end(), index)) {
      out.emplace_back(index, value);
    }
  }
  return FlatMap<Tag>::from_entries(std::move(out));
}

template <class Tag>
FlatMap<Tag> add(const FlatMap<Tag>& a, const FlatMap<Tag>& b) {
  std::vector<typename FlatMap<Tag>::Entry> out;
  out.reserve(a.size() + b.size());
  for (const auto& e : a.entries()) out.push_back(e);
  for (const auto& e : b.entries()) out.push_back(e);
  return FlatMap<Tag>::from_entries(std::move(out));
}

template <class Tag>
FlatMap<Tag> scale(const Rational& c, const FlatMap<Tag>& v) {
  std::vector<typename FlatMap<Tag>::Entry> out;
  out.reserve(v.size());
  if (c != 0) {
    for (const auto& [index, value] : v.entries()) out.emplace_back(index, c * value);
  }
  return FlatMap<Tag>::from_entries(std::move(out));
}

}  // namespace qgl1
