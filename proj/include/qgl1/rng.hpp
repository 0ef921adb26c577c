#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qgl1 {

/// Self-contained splitmix64 stream. The generator is pinned here rather
/// than taken from <random> so that seeded runs are byte-identical across
/// platforms, standard libraries and thread counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n), unbiased via rejection. n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t zone = ~0ULL - ~0ULL % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= zone);
    return v % n;
  }

  /// Distinct values from {1..universe}, ascending. Floyd's sampling.
  std::vector<std::int64_t> sample_distinct(std::uint64_t count, std::uint64_t universe);

 private:
  std::uint64_t state_;
};

/// Derives an independent per-trial stream from a run seed, independent of
/// scheduling order.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  Rng mix(seed ^ (0xd1b54a32d192ed03ULL * (trial + 1)));
  std::uint64_t s = mix.next();
  return Rng(s);
}

}  // namespace qgl1
