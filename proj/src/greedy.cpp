#include "qgl1/greedy.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "qgl1/rng.hpp"
#include "qgl1/serialize.hpp"

namespace qgl1 {

namespace {

struct RankedEntry {
  Index index;
  Rational modulus;
};

// Decreasing modulus, ties by smaller index.
std::vector<RankedEntry> ranked(const CoeffMap& coeffs) {
  std::vector<RankedEntry> out;
  out.reserve(coeffs.size());
  for (const auto& [index, value] : coeffs.entries()) out.push_back({index, abs(value)});
  std::stable_sort(out.begin(), out.end(), [](const RankedEntry& a, const RankedEntry& b) {
    int c = cmp(a.modulus, b.modulus);
    if (c != 0) return c > 0;
    return a.index < b.index;
  });
  return out;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    std::uint64_t factor = n - k + j;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * factor / j;
  }
  return result;
}

std::string witness_key(const QGWitness& w) {
  Json obj = Json::object();
  obj["coeffs"] = to_json(w.coeffs);
  obj["m"] = w.m;
  obj["selection"] = w.selection.indices;
  return obj.dump();
}

}  // namespace

GreedySets greedy_sets(const CoeffMap& coeffs, std::size_t m, std::size_t enum_cap) {
  if (m > coeffs.size()) {
    throw Error("MTooLarge", "m = " + std::to_string(m) + " exceeds support size " +
                                 std::to_string(coeffs.size()));
  }
  GreedySets sets;
  if (m == 0) {
    sets.canonical.canonical = true;
    sets.count = 1;
    sets.enumerated = true;
    sets.all.push_back(sets.canonical);
    return sets;
  }

  std::vector<RankedEntry> order = ranked(coeffs);
  const Rational& threshold = order[m - 1].modulus;

  std::vector<Index> must;    // modulus strictly above the threshold
  std::vector<Index> ties;    // modulus equal to the threshold
  for (const auto& entry : order) {
    if (entry.modulus > threshold) {
      must.push_back(entry.index);
    } else if (entry.modulus == threshold) {
      ties.push_back(entry.index);
    }
  }
  std::sort(must.begin(), must.end());
  std::sort(ties.begin(), ties.end());
  const std::size_t take = m - must.size();

  auto make_selection = [&](const std::vector<Index>& chosen_ties, bool canonical) {
    GreedySelection sel;
    sel.indices = must;
    sel.indices.insert(sel.indices.end(), chosen_ties.begin(), chosen_ties.end());
    std::sort(sel.indices.begin(), sel.indices.end());
    sel.canonical = canonical;
    return sel;
  };

  std::vector<Index> first_ties(ties.begin(), ties.begin() + take);
  sets.canonical = make_selection(first_ties, true);
  sets.count = binomial_saturating(ties.size(), take);

  if (sets.count <= enum_cap) {
    sets.enumerated = true;
    // Combinations of the tie group in ascending lexicographic order.
    std::vector<std::size_t> pick(take);
    for (std::size_t j = 0; j < take; ++j) pick[j] = j;
    while (true) {
      std::vector<Index> chosen;
      chosen.reserve(take);
      for (std::size_t p : pick) chosen.push_back(ties[p]);
      sets.all.push_back(make_selection(chosen, chosen == first_ties));
      if (take == 0) break;
      std::size_t j = take;
      while (j > 0 && pick[j - 1] == ties.size() - take + (j - 1)) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t l = j; l < take; ++l) pick[l] = pick[l - 1] + 1;
    }
  }
  return sets;
}

CoeffMap greedy_operator(const CoeffMap& coeffs, std::size_t m, const GreedySelection& selection) {
  if (m > coeffs.size()) {
    throw Error("MTooLarge", "m = " + std::to_string(m) + " exceeds support size " +
                                 std::to_string(coeffs.size()));
  }
  if (selection.indices.size() != m) {
    throw Error("InvalidSelection", "selection size differs from m");
  }
  if (!std::is_sorted(selection.indices.begin(), selection.indices.end()) ||
      std::adjacent_find(selection.indices.begin(), selection.indices.end()) !=
          selection.indices.end()) {
    throw Error("InvalidSelection", "selection indices must be strictly ascending");
  }
  Rational min_kept(-1);
  for (Index i : selection.indices) {
    if (!coeffs.contains(i)) {
      throw Error("InvalidSelection", "index " + std::to_string(i) + " is not in the support");
    }
    Rational a = abs(coeffs.at(i));
    if (min_kept < 0 || a < min_kept) min_kept = a;
  }
  for (const auto& [index, value] : coeffs.entries()) {
    if (std::binary_search(selection.indices.begin(), selection.indices.end(), index)) continue;
    if (m > 0 && abs(value) > min_kept) {
      throw Error("InvalidSelection", "dropped index " + std::to_string(index) +
                                          " has larger modulus than a kept one");
    }
  }
  return restrict_to(coeffs, selection.indices);
}

Rational qg_ratio(const CoeffMap& coeffs, std::size_t m, std::size_t enum_cap) {
  if (coeffs.empty()) {
    throw Error("EmptyCoeffMap", "qg_ratio requires a nonempty coefficient map");
  }
  Rational denom = l1_norm(expand(coeffs));
  GreedySets sets = greedy_sets(coeffs, m, enum_cap);
  Rational best(0);
  auto measure = [&](const GreedySelection& sel) {
    Rational value = l1_norm(expand(restrict_to(coeffs, sel.indices)));
    if (value > best) best = value;
  };
  if (sets.enumerated) {
    for (const auto& sel : sets.all) measure(sel);
  } else {
    measure(sets.canonical);
  }
  return best / denom;
}

namespace {

struct SearchBest {
  bool found = false;
  Rational ratio;
  QGWitness witness;
  std::string key;
};

void consider(SearchBest& best, const Rational& ratio, QGWitness witness) {
  if (best.found && ratio < best.ratio) return;
  std::string key = witness_key(witness);
  if (best.found && ratio == best.ratio && key >= best.key) return;
  best.found = true;
  best.ratio = ratio;
  best.witness = std::move(witness);
  best.key = std::move(key);
}

// Measures every m and every enumerable selection of one candidate map.
void evaluate_candidate(const CoeffMap& coeffs, SearchBest& best) {
  if (coeffs.empty()) return;
  Rational denom = l1_norm(expand(coeffs));
  for (std::size_t m = 1; m <= coeffs.size(); ++m) {
    GreedySets sets = greedy_sets(coeffs, m);
    std::span<const GreedySelection> selections =
        sets.enumerated ? std::span<const GreedySelection>(sets.all)
                        : std::span<const GreedySelection>(&sets.canonical, 1);
    for (const auto& sel : selections) {
      Rational ratio = l1_norm(expand(restrict_to(coeffs, sel.indices))) / denom;
      consider(best, ratio, QGWitness{coeffs, m, sel});
    }
  }
}

void merge(SearchBest& into, SearchBest& from) {
  if (!from.found) return;
  if (!into.found || from.ratio > into.ratio ||
      (from.ratio == into.ratio && from.key < into.key)) {
    into = std::move(from);
  }
}

const Rational kQuasiGreedyBound(3);

}  // namespace

QGReport qg_lower_bound_search(const QGSearchConfig& config) {
  if (config.max_index < 1 || config.max_index > 10000) {
    throw Error("InvalidArgument", "max_index must be in [1, 10000]");
  }
  if (config.support_size < 1 ||
      config.support_size > static_cast<std::size_t>(config.max_index)) {
    throw Error("InvalidArgument", "support_size must be in [1, max_index]");
  }
  if (config.grid.empty()) {
    throw Error("InvalidArgument", "coefficient grid must be nonempty");
  }

  SearchBest best;
  if (config.trials == 0) {
    // Exhaustive: every support of size <= support_size inside
    // {1..max_index}, every grid assignment, in a fixed order.
    std::vector<Index> support;
    std::vector<std::size_t> assignment;
    auto assign = [&](auto&& self, std::size_t pos) -> void {
      if (pos == support.size()) {
        std::vector<CoeffMap::Entry> entries;
        entries.reserve(support.size());
        for (std::size_t j = 0; j < support.size(); ++j) {
          entries.emplace_back(support[j], config.grid[assignment[j]]);
        }
        evaluate_candidate(CoeffMap::from_entries(std::move(entries)), best);
        return;
      }
      for (std::size_t g = 0; g < config.grid.size(); ++g) {
        assignment[pos] = g;
        self(self, pos + 1);
      }
    };
    auto choose = [&](auto&& self, Index next) -> void {
      if (!support.empty()) {
        assignment.assign(support.size(), 0);
        assign(assign, 0);
      }
      if (support.size() == config.support_size) return;
      for (Index i = next; i <= config.max_index; ++i) {
        support.push_back(i);
        self(self, i + 1);
        support.pop_back();
      }
    };
    choose(choose, 1);
  } else {
    const unsigned threads = std::max(1u, config.threads);
    std::vector<SearchBest> partial(threads);
    auto worker = [&](unsigned t) {
      for (std::uint64_t trial = t; trial < config.trials; trial += threads) {
        Rng rng = trial_rng(config.seed, trial);
        std::size_t size = 1 + static_cast<std::size_t>(rng.below(config.support_size));
        std::vector<Index> support =
            rng.sample_distinct(size, static_cast<std::uint64_t>(config.max_index));
        std::vector<CoeffMap::Entry> entries;
        entries.reserve(size);
        for (Index i : support) {
          entries.emplace_back(i, config.grid[rng.below(config.grid.size())]);
        }
        evaluate_candidate(CoeffMap::from_entries(std::move(entries)), partial[t]);
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
      for (auto& th : pool) th.join();
    }
    for (auto& p : partial) merge(best, p);
  }

  if (!best.found) {
    throw Error("EmptySearch", "no nonempty candidate arose from the configuration");
  }
  return QGReport{best.ratio, best.witness, kQuasiGreedyBound};
}

UccReport ucc_constants(std::size_t m) {
  if (m < 1) {
    throw Error("InvalidArgument", "ucc_constants requires m >= 1");
  }
  if (m > kUccCap) {
    throw Error("TooLarge", "m = " + std::to_string(m) + " exceeds the exhaustive cap " +
                                std::to_string(kUccCap));
  }
  std::vector<CoeffMap::Entry> ones;
  for (Index i = 1; i <= static_cast<Index>(m); ++i) ones.emplace_back(i, Rational(1));
  UccReport report;
  report.m = m;
  report.base_norm = l1_norm(expand(CoeffMap::from_entries(std::move(ones))));

  // Signs modulo a global flip: eps_1 is pinned to +1 and the remaining
  // m - 1 signs run over all 2^{m-1} patterns.
  const std::uint64_t patterns = std::uint64_t(1) << (m - 1);
  for (std::uint64_t p = 0; p < patterns; ++p) {
    std::vector<int> signs(m, 1);
    std::vector<CoeffMap::Entry> entries;
    entries.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (i > 0 && ((p >> (i - 1)) & 1)) signs[i] = -1;
      entries.emplace_back(static_cast<Index>(i + 1), Rational(signs[i]));
    }
    Rational ratio = l1_norm(expand(CoeffMap::from_entries(std::move(entries)))) / report.base_norm;
    if (p == 0 || ratio < report.c_min) {
      report.c_min = ratio;
      report.min_pattern = signs;
    }
    if (p == 0 || ratio > report.c_max) {
      report.c_max = ratio;
      report.max_pattern = signs;
    }
  }
  return report;
}

ConditionalityWitness conditionality_witness(int n) {
  if (n < 1) {
    throw Error("InvalidArgument", "conditionality_witness requires n >= 1");
  }
  CoeffMap weights = level_weights(n);
  ConditionalityWitness witness;
  witness.n = n;
  witness.base_norm = l1_norm(expand(weights));

  std::vector<CoeffMap::Entry> flipped;
  flipped.reserve(weights.size());
  witness.signs.reserve(weights.size());
  for (const auto& [i, a] : weights.entries()) {
    int sign = (level(i) % 2 == 0) ? 1 : -1;
    witness.signs.push_back(sign);
    flipped.emplace_back(i, sign > 0 ? a : -a);
  }
  witness.flipped_norm = l1_norm(expand(CoeffMap::from_entries(std::move(flipped))));
  witness.ratio = witness.flipped_norm / witness.base_norm;
  return witness;
}

}  // namespace qgl1
