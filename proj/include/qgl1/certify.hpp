#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qgl1/rng.hpp"
#include "qgl1/sparse.hpp"

namespace qgl1 {

/// Mechanical verification of the quasi-greedy inequality
///
///   3 ||x + y|| >= ||x||,   x = sum_{S1} a_i x_i,  y = sum_{S2} a_i x_i,
///
/// for disjoint index sets with min_{S1}|a_i| >= max_{S2}|a_i|, together
/// with a full replay of the inductive set construction behind it. Every
/// intermediate inequality is recorded with both sides as exact rationals,
/// so a report doubles as a machine-checkable certificate.

struct Instance {
  std::vector<Index> s1;  // ascending
  std::vector<Index> s2;  // ascending
  CoeffMap alpha;         // coefficients on s1 union s2; zeros stripped

  /// Normalizes and validates: drops indices whose coefficient is zero or
  /// absent, requires disjointness and the threshold condition
  /// min_{S1}|a| >= max_{S2}|a|. Throws Error("PreconditionViolated").
  static Instance make(std::vector<Index> s1, std::vector<Index> s2, CoeffMap alpha);
};

/// Coordinates where the plain sum over S1 of basis vectors equals 1
/// (head), -1/2 (frontier: child coordinates hanging off the head), and
/// 1/2 (overlap: S1 nodes cancelling against an S1 parent). Disjoint, and
/// together they cover the support of that sum.
struct Partition {
  std::vector<Index> head;
  std::vector<Index> frontier;
  std::vector<Index> overlap;
};

Partition partition_support(std::span<const Index> s1);

/// One stage of the induction. The previous frontier activates the S2
/// indices sitting on it; their children either land inside the head set
/// (absorbed) or form the next frontier.
struct TraceStep {
  std::vector<Index> activated;
  std::vector<Index> absorbed;
  std::vector<Index> frontier;
  Rational star_lhs;  // ||P_{prev front}(y_{l-1}+y_l)|| + ||P_{front} y_l||
  Rational star_rhs;  // ||P_{prev front} y_{l-1}|| - ||P_{absorbed} y_l||
};

struct IneqCheck {
  Rational lhs;
  Rational rhs;
  bool holds = false;  // lhs >= rhs
};

/// Labels used in TraceReport::final_checks, in emission order:
/// "ww", "majorineq", "MNw", "MN", "L", "main".
extern const std::vector<std::string> kFinalCheckLabels;

struct TraceReport {
  Instance instance;
  Partition p0;
  std::vector<TraceStep> steps;
  std::size_t k = 0;  // stage at which W_{k+1} is empty
  std::map<std::string, IneqCheck> final_checks;
};

/// Runs the full induction and records every inequality. Exact; never
/// rounds. The recursion terminates because the minimum index of each B_l
/// more than doubles per stage.
TraceReport trace_chain(const Instance& instance);

/// Re-derives every claim a report makes (step inequalities, the final
/// chain, set disjointness, support separation, termination growth) and
/// returns a flat list of violation descriptions, empty when the
/// certificate is sound.
std::vector<std::string> trace_violations(const TraceReport& report);

struct MainInequality {
  Rational lhs;    // 3 ||x + y||
  Rational rhs;    // ||x||
  Rational slack;  // lhs - rhs
};

/// Direct evaluation of the main inequality, independent of the trace.
MainInequality check_inequality(const Instance& instance);

struct InstanceConfig {
  Index max_index = 60;
  std::size_t max_s1 = 10;
  std::size_t max_s2 = 10;
  std::vector<Rational> grid;  // nonzero magnitudes are drawn from here
  std::uint64_t seed = 0;
};

/// Deterministic per-(seed, trial) instance that satisfies the threshold
/// condition by construction: S2 magnitudes are drawn at or below the
/// smallest S1 magnitude.
Instance random_instance(const InstanceConfig& config, std::uint64_t trial);

/// Dyadic default grid {±2^-k : 0 <= k <= 4}.
std::vector<Rational> dyadic_grid();

}  // namespace qgl1
