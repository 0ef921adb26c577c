#include <doctest.h>

#include "oracles.hpp"
#include "qgl1/certify.hpp"
#include "qgl1/report_json.hpp"

using namespace qgl1;
using namespace qgl1::testing;

namespace {

Instance instance_of(std::vector<Index> s1, std::vector<Index> s2,
                     std::vector<CoeffMap::Entry> alpha) {
  return Instance::make(std::move(s1), std::move(s2),
                        CoeffMap::from_entries(std::move(alpha)));
}

}  // namespace

TEST_SUITE("certify") {

TEST_CASE("support partition of the S1 sum") {
  Partition single = partition_support(std::vector<Index>{1});
  CHECK(single.head == std::vector<Index>{1});
  CHECK(single.frontier == std::vector<Index>{3, 4});
  CHECK(single.overlap.empty());

  Partition nested = partition_support(std::vector<Index>{1, 3});
  CHECK(nested.head == std::vector<Index>{1});
  CHECK(nested.frontier == std::vector<Index>{4, 7, 8});
  CHECK(nested.overlap == std::vector<Index>{3});

  Partition empty = partition_support(std::vector<Index>{});
  CHECK(empty.head.empty());
  CHECK(empty.frontier.empty());
  CHECK(empty.overlap.empty());
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(instance_of({1}, {1}, {{1, 1}}), Error);
  // S2 coefficient above the S1 minimum violates the threshold condition.
  CHECK_THROWS_AS(instance_of({1}, {3}, {{1, make_rational(1, 2)}, {3, 1}}), Error);
  // Coefficients outside S1 and S2 are rejected.
  CHECK_THROWS_AS(instance_of({1}, {}, {{1, 1}, {9, 1}}), Error);
  // Zero coefficients mean the index is absent.
  Instance pruned = instance_of({1, 2}, {5}, {{1, 1}, {5, make_rational(1, 2)}});
  CHECK(pruned.s1 == std::vector<Index>{1});
  CHECK(pruned.s2 == std::vector<Index>{5});
}

TEST_CASE("one-stage trace, every side frozen") {
  Instance instance = instance_of({1}, {3}, {{1, 1}, {3, 1}});
  TraceReport report = trace_chain(instance);
  CHECK(report.k == 1);
  REQUIRE(report.steps.size() == 1);
  CHECK(report.steps[0].activated == std::vector<Index>{3});
  CHECK(report.steps[0].absorbed.empty());
  CHECK(report.steps[0].frontier == std::vector<Index>{7, 8});
  CHECK(report.steps[0].star_lhs == 2);
  CHECK(report.steps[0].star_rhs == 1);

  CHECK(report.final_checks.at("ww").lhs == 2);
  CHECK(report.final_checks.at("ww").rhs == 1);
  CHECK(report.final_checks.at("majorineq").lhs == 2);
  CHECK(report.final_checks.at("majorineq").rhs == 1);
  CHECK(report.final_checks.at("MNw").lhs == 3);
  CHECK(report.final_checks.at("MNw").rhs == 2);
  CHECK(report.final_checks.at("MN").lhs == 3);
  CHECK(report.final_checks.at("MN").rhs == 1);
  CHECK(report.final_checks.at("L").lhs == 6);
  CHECK(report.final_checks.at("L").rhs == 1);
  CHECK(report.final_checks.at("main").lhs == 9);
  CHECK(report.final_checks.at("main").rhs == 2);
  CHECK(trace_violations(report).empty());
}

TEST_CASE("empty S2 ends at stage zero") {
  TraceReport report = trace_chain(instance_of({1}, {}, {{1, 1}}));
  CHECK(report.k == 0);
  CHECK(report.steps.empty());
  CHECK(report.final_checks.at("main").lhs == 6);
  CHECK(report.final_checks.at("main").rhs == 2);
  CHECK(trace_violations(report).empty());
}

TEST_CASE("the chain starts only from the frontier") {
  // 1 sits above S1 = {3,4}, not on its frontier, so nothing activates.
  TraceReport report = trace_chain(instance_of({3, 4}, {1}, {{1, 1}, {3, 1}, {4, 1}}));
  CHECK(report.k == 0);
  CHECK(report.final_checks.at("main").lhs == 12);
  CHECK(report.final_checks.at("main").rhs == 4);
  CHECK(trace_violations(report).empty());
}

TEST_CASE("empty instances degrade gracefully") {
  TraceReport report = trace_chain(instance_of({}, {}, {}));
  CHECK(report.k == 0);
  CHECK(report.final_checks.at("main").lhs == 0);
  CHECK(report.final_checks.at("main").rhs == 0);
  CHECK(trace_violations(report).empty());

  TraceReport only_s2 = trace_chain(instance_of({}, {2, 3}, {{2, 1}, {3, -1}}));
  CHECK(only_s2.final_checks.at("main").rhs == 0);
  CHECK(trace_violations(only_s2).empty());
}

TEST_CASE("direct check matches the example sums") {
  MainInequality direct = check_inequality(instance_of({1}, {}, {{1, 1}}));
  CHECK(direct.lhs == 6);
  CHECK(direct.rhs == 2);
  CHECK(direct.slack == 4);

  // The interleaved configuration: coordinate 3 keeps half its weight.
  MainInequality nested = check_inequality(instance_of({3}, {1}, {{1, 1}, {3, 1}}));
  CHECK(nested.lhs == 9);
  CHECK(nested.rhs == 2);

  // Level-halving weights on two levels.
  MainInequality weighted = check_inequality(instance_of(
      {1, 2}, {3, 4, 5, 6},
      {{1, 1}, {2, 1}, {3, make_rational(1, 2)}, {4, make_rational(1, 2)},
       {5, make_rational(1, 2)}, {6, make_rational(1, 2)}}));
  CHECK(weighted.lhs == 12);
  CHECK(weighted.rhs == 4);
  CHECK(weighted.slack >= 0);
}

TEST_CASE("random instances are reproducible and valid") {
  InstanceConfig config;
  config.max_index = 40;
  config.grid = dyadic_grid();
  config.seed = 5;
  Instance a = random_instance(config, 17);
  Instance b = random_instance(config, 17);
  CHECK(a.s1 == b.s1);
  CHECK(a.s2 == b.s2);
  CHECK(a.alpha == b.alpha);

  InstanceConfig empty_s1 = config;
  empty_s1.max_s1 = 0;
  empty_s1.max_s2 = 3;
  Instance c = random_instance(empty_s1, 0);
  CHECK(c.s1.empty());
  CHECK(check_inequality(c).rhs == 0);
}

TEST_CASE("the full chain holds on a random family") {
  InstanceConfig config;
  config.max_index = 40;
  config.grid = dyadic_grid();
  config.seed = 6;
  for (std::uint64_t trial = 0; trial < 2000; ++trial) {
    Instance instance = random_instance(config, trial);
    TraceReport report = trace_chain(instance);
    auto violations = trace_violations(report);
    if (!violations.empty()) {
      CAPTURE(dump_line(trace_report_to_json(report)));
      CAPTURE(violations.front());
      FAIL("certificate violation on a random instance");
    }
    MainInequality direct = check_inequality(instance);
    CHECK(direct.lhs == report.final_checks.at("main").lhs);
    CHECK(direct.rhs == report.final_checks.at("main").rhs);
    CHECK(direct.slack >= 0);
  }
}

TEST_CASE("the verifier notices a corrupted certificate") {
  TraceReport report = trace_chain(instance_of({1}, {3}, {{1, 1}, {3, 1}}));
  REQUIRE(trace_violations(report).empty());

  TraceReport bad_star = report;
  bad_star.steps[0].star_rhs = bad_star.steps[0].star_lhs + 1;
  CHECK(!trace_violations(bad_star).empty());

  TraceReport bad_main = report;
  bad_main.final_checks["main"].lhs += 1;  // no longer matches the instance
  CHECK(!trace_violations(bad_main).empty());

  TraceReport bad_sets = report;
  bad_sets.steps[0].frontier = bad_sets.p0.frontier;  // breaks disjointness
  CHECK(!trace_violations(bad_sets).empty());
}

}  // TEST_SUITE
