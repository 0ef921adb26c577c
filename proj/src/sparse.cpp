#include "qgl1/sparse.hpp"

namespace qgl1 {

Rational l1_norm(const SparseVec& v) {
  Rational total(0);
  for (const auto& [index, value] : v.entries()) total += abs(value);
  return total;
}

Rational sup_norm(const SparseVec& v) {
  Rational best(0);
  for (const auto& [index, value] : v.entries()) {
    Rational a = abs(value);
    if (a > best) best = a;
  }
  return best;
}

Rational pairing(const SparseVec& f, const SparseVec& v) {
  Rational total(0);
  auto fe = f.entries();
  auto ve = v.entries();
  std::size_t i = 0, j = 0;
  while (i < fe.size() && j < ve.size()) {
    if (fe[i].first < ve[j].first) {
      ++i;
    } else if (fe[i].first > ve[j].first) {
      ++j;
    } else {
      total += fe[i].second * ve[j].second;
      ++i;
      ++j;
    }
  }
  return total;
}

SparseVec linear_combine(std::span<const std::pair<Rational, SparseVec>> terms) {
  SparseVecBuilder builder;
  std::size_t total = 0;
  for (const auto& [c, v] : terms) total += v.size();
  builder.reserve(total);
  for (const auto& [c, v] : terms) {
    if (c == 0) continue;
    for (const auto& [index, value] : v.entries()) builder.add(index, c * value);
  }
  return builder.build();
}

}  // namespace qgl1
