#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "qgl1/rational.hpp"

namespace qgl1 {

/// Outcome of one verification trial. `ratio` is the certified quantity of
/// the run (||x|| / ||x+y|| for instance verification, the greedy ratio for
/// searches); `witness` carries the serialized failing data when !ok.
struct TrialRecord {
  std::uint64_t trial = 0;
  bool ok = true;
  Rational ratio;
  std::size_t stages = 0;
  std::string witness;
};

struct Summary {
  std::uint64_t count = 0;
  std::uint64_t failures = 0;
  Rational max_ratio;
  std::uint64_t max_ratio_trial = 0;
  std::size_t max_stages = 0;
  std::string first_failure;  // witness of the lowest failing trial
};

/// Aggregates records in trial order; identical streams give identical
/// summaries regardless of how the records were produced.
Summary summarize(std::span<const TrialRecord> records);

/// Runs fn(trial) for trial = 0..trials-1, striped across the given number
/// of threads, collecting results into trial-indexed slots. The output is
/// independent of scheduling.
template <class Fn>
std::vector<TrialRecord> run_trials(std::uint64_t trials, unsigned threads, Fn fn) {
  std::vector<TrialRecord> records(trials);
  threads = std::max(1u, threads);
  auto worker = [&](unsigned t) {
    for (std::uint64_t trial = t; trial < trials; trial += threads) {
      records[trial] = fn(trial);
      records[trial].trial = trial;
    }
  };
  if (threads == 1 || trials < 2) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  return records;
}

}  // namespace qgl1
