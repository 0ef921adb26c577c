#include <doctest.h>

#include "qgl1/report_json.hpp"
#include "qgl1/reporting.hpp"
#include "qgl1/rng.hpp"

using namespace qgl1;

TEST_SUITE("reporting") {

TEST_CASE("empty streams summarize to zero counts") {
  Summary summary = summarize(std::vector<TrialRecord>{});
  CHECK(summary.count == 0);
  CHECK(summary.failures == 0);
  CHECK(summary.max_ratio == 0);
}

TEST_CASE("identical streams give identical summaries") {
  std::vector<TrialRecord> records;
  for (std::uint64_t t = 0; t < 10; ++t) {
    TrialRecord r;
    r.trial = t;
    r.ratio = make_rational(static_cast<long>(t), 7);
    r.stages = static_cast<std::size_t>(t % 3);
    records.push_back(r);
  }
  Summary a = summarize(records);
  Summary b = summarize(records);
  CHECK(dump_line(summary_to_json(a)) == dump_line(summary_to_json(b)));
  CHECK(a.max_ratio == make_rational(9, 7));
  CHECK(a.max_ratio_trial == 9);
  CHECK(a.max_stages == 2);
}

TEST_CASE("failures keep the earliest witness") {
  std::vector<TrialRecord> records(3);
  records[1].ok = false;
  records[1].witness = "first";
  records[2].ok = false;
  records[2].witness = "second";
  Summary summary = summarize(records);
  CHECK(summary.failures == 2);
  CHECK(summary.first_failure == "first");
}

TEST_CASE("trial running is deterministic across thread counts") {
  auto job = [](std::uint64_t trial) {
    TrialRecord r;
    Rng rng = trial_rng(99, trial);
    r.ratio = make_rational(static_cast<long>(rng.below(1000)), 1000);
    return r;
  };
  auto serial = run_trials(500, 1, job);
  auto parallel = run_trials(500, 4, job);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].ratio == parallel[i].ratio);
    CHECK(serial[i].trial == i);
  }
  CHECK(dump_line(summary_to_json(summarize(serial))) ==
        dump_line(summary_to_json(summarize(parallel))));
}

}  // TEST_SUITE
