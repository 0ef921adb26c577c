#pragma once

#include "qgl1/direct_sum.hpp"
#include "qgl1/rng.hpp"
#include "qgl1/sparse.hpp"

namespace qgl1 {

/// Seeded generators used by the randomized verification suites. All draws
/// go through Rng, so a (seed, trial) pair pins the result exactly.

/// Support of size <= max_size inside {1..max_index}, coefficients from the
/// grid. Zero grid entries are legal and simply shrink the support.
CoeffMap random_coeff_map(Rng& rng, Index max_index, std::size_t max_size,
                          std::span<const Rational> grid);

/// Up to max_blocks distinct block indices inside {1..max_block_index};
/// block n gets a coefficient map supported on {1..n}.
DSVec random_ds_vec(Rng& rng, std::size_t max_blocks, Index max_block_index,
                    std::span<const Rational> grid);

}  // namespace qgl1
