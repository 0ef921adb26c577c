#include "qgl1/rng.hpp"

#include <algorithm>

namespace qgl1 {

std::vector<std::int64_t> Rng::sample_distinct(std::uint64_t count, std::uint64_t universe) {
  std::vector<std::int64_t> picked;
  picked.reserve(count);
  for (std::uint64_t j = universe - count + 1; j <= universe; ++j) {
    std::int64_t candidate = static_cast<std::int64_t>(below(j)) + 1;
    if (std::find(picked.begin(), picked.end(), candidate) != picked.end()) {
      picked.push_back(static_cast<std::int64_t>(j));
    } else {
      picked.push_back(candidate);
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace qgl1
