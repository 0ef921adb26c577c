#include "qgl1/certify.hpp"

#include <algorithm>

#include "qgl1/lindenstrauss.hpp"

namespace qgl1 {

const std::vector<std::string> kFinalCheckLabels = {"ww", "majorineq", "MNw",
                                                    "MN", "L", "main"};

namespace {

std::vector<Index> sorted_unique(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Index> intersection(std::span<const Index> a, std::span<const Index> b) {
  std::vector<Index> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(std::span<const Index> a, std::span<const Index> b) {
  return intersection(a, b).empty();
}

}  // namespace

Instance Instance::make(std::vector<Index> s1, std::vector<Index> s2, CoeffMap alpha) {
  Instance inst;
  inst.s1 = sorted_unique(std::move(s1));
  inst.s2 = sorted_unique(std::move(s2));
  if (!disjoint(inst.s1, inst.s2)) {
    throw Error("PreconditionViolated", "S1 and S2 must be disjoint");
  }
  for (const auto& [index, value] : alpha.entries()) {
    bool in_s1 = std::binary_search(inst.s1.begin(), inst.s1.end(), index);
    bool in_s2 = std::binary_search(inst.s2.begin(), inst.s2.end(), index);
    if (!in_s1 && !in_s2) {
      throw Error("PreconditionViolated",
                  "coefficient index " + std::to_string(index) + " is outside S1 and S2");
    }
  }
  // A zero (or missing) coefficient means the index is absent.
  auto prune = [&](std::vector<Index>& s) {
    std::erase_if(s, [&](Index i) { return !alpha.contains(i); });
  };
  prune(inst.s1);
  prune(inst.s2);
  inst.alpha = std::move(alpha);

  if (!inst.s1.empty() && !inst.s2.empty()) {
    Rational min_s1 = abs(inst.alpha.at(inst.s1.front()));
    for (Index i : inst.s1) {
      Rational a = abs(inst.alpha.at(i));
      if (a < min_s1) min_s1 = a;
    }
    Rational max_s2(0);
    for (Index i : inst.s2) {
      Rational a = abs(inst.alpha.at(i));
      if (a > max_s2) max_s2 = a;
    }
    if (min_s1 < max_s2) {
      throw Error("PreconditionViolated",
                  "min |a| over S1 must dominate max |a| over S2");
    }
  }
  return inst;
}

Partition partition_support(std::span<const Index> s1) {
  std::vector<std::pair<Rational, SparseVec>> terms;
  terms.reserve(s1.size());
  for (Index i : s1) terms.emplace_back(Rational(1), basis_vector(i));
  SparseVec sum = linear_combine(terms);

  const Rational minus_half(-1, 2);
  const Rational half(1, 2);
  Partition p;
  for (const auto& [index, value] : sum.entries()) {
    if (value == 1) {
      p.head.push_back(index);
    } else if (value == minus_half) {
      p.frontier.push_back(index);
    } else if (value == half) {
      p.overlap.push_back(index);
    } else {
      throw Error("Internal", "unexpected coordinate value in S1 partition");
    }
  }
  return p;
}

namespace {

SparseVec expand_over(const CoeffMap& alpha, std::span<const Index> subset) {
  std::vector<CoeffMap::Entry> entries;
  entries.reserve(subset.size());
  for (Index i : subset) entries.emplace_back(i, alpha.at(i));
  return expand(CoeffMap::from_entries(std::move(entries)));
}

Rational norm_on(const SparseVec& v, std::span<const Index> sset) {
  return l1_norm(restrict_to(v, sset));
}

}  // namespace

TraceReport trace_chain(const Instance& instance) {
  TraceReport report;
  report.instance = instance;
  report.p0 = partition_support(instance.s1);

  const SparseVec x = expand_over(instance.alpha, instance.s1);
  const SparseVec y = expand_over(instance.alpha, instance.s2);
  const SparseVec total = add(x, y);

  SparseVec y_prev = x;  // y_0 = x
  std::vector<Index> frontier_prev = report.p0.frontier;

  Rational sum_mixed(0);     // sum over stages of ||P_{B_{l-1}}(y_{l-1}+y_l)||
  Rational sum_absorbed(0);  // sum over stages of ||P_{A_l} y_l||
  Rational tail_term = norm_on(y_prev, frontier_prev);  // ||P_{B_k} y_k|| at the current k

  while (true) {
    std::vector<Index> activated = intersection(instance.s2, frontier_prev);
    if (activated.empty()) break;

    TraceStep step;
    step.activated = activated;
    for (Index i : activated) {
      for (Index child : {2 * i + 1, 2 * i + 2}) {
        if (std::binary_search(report.p0.head.begin(), report.p0.head.end(), child)) {
          step.absorbed.push_back(child);
        } else {
          step.frontier.push_back(child);
        }
      }
    }
    std::sort(step.absorbed.begin(), step.absorbed.end());
    std::sort(step.frontier.begin(), step.frontier.end());

    SparseVec y_cur = expand_over(instance.alpha, step.activated);
    Rational mixed = norm_on(add(y_prev, y_cur), frontier_prev);
    Rational frontier_mass = norm_on(y_cur, step.frontier);
    Rational absorbed_mass = norm_on(y_cur, step.absorbed);
    step.star_lhs = mixed + frontier_mass;
    step.star_rhs = norm_on(y_prev, frontier_prev) - absorbed_mass;

    sum_mixed += mixed;
    sum_absorbed += absorbed_mass;
    tail_term = frontier_mass;

    frontier_prev = step.frontier;
    y_prev = std::move(y_cur);
    report.steps.push_back(std::move(step));
  }
  report.k = report.steps.size();

  auto record = [&](const std::string& label, Rational lhs, Rational rhs) {
    report.final_checks[label] = IneqCheck{lhs, rhs, lhs >= rhs};
  };

  const Rational norm_b0_x = norm_on(x, report.p0.frontier);
  record("ww", sum_mixed + tail_term, norm_b0_x - sum_absorbed);

  Rational frontier_total = norm_on(total, report.p0.frontier);
  for (const auto& step : report.steps) frontier_total += norm_on(total, step.frontier);
  const Rational norm_a0_y = norm_on(y, report.p0.head);
  record("majorineq", frontier_total, norm_b0_x - norm_a0_y);

  const Rational norm_total = l1_norm(total);
  const Rational norm_a0_total = norm_on(total, report.p0.head);
  const Rational norm_c0_x = norm_on(x, report.p0.overlap);
  record("MNw", norm_total, norm_a0_total - norm_a0_y + norm_b0_x + norm_c0_x);
  record("MN", norm_total, norm_b0_x + norm_c0_x);
  record("L", 2 * norm_total, norm_on(x, report.p0.head));
  record("main", 3 * norm_total, l1_norm(x));
  return report;
}

MainInequality check_inequality(const Instance& instance) {
  SparseVec x = expand_over(instance.alpha, instance.s1);
  std::vector<Index> all(instance.s1.begin(), instance.s1.end());
  all.insert(all.end(), instance.s2.begin(), instance.s2.end());
  SparseVec total = expand_over(instance.alpha, sorted_unique(std::move(all)));
  MainInequality result;
  result.lhs = 3 * l1_norm(total);
  result.rhs = l1_norm(x);
  result.slack = result.lhs - result.rhs;
  return result;
}

std::vector<std::string> trace_violations(const TraceReport& report) {
  std::vector<std::string> violations;
  auto flag = [&](const std::string& message) { violations.push_back(message); };

  // Step inequalities.
  for (std::size_t l = 0; l < report.steps.size(); ++l) {
    if (report.steps[l].star_lhs < report.steps[l].star_rhs) {
      flag("step " + std::to_string(l + 1) + ": star inequality fails");
    }
  }

  // Final chain: labels present, sides consistent with the holds flag.
  for (const auto& label : kFinalCheckLabels) {
    auto it = report.final_checks.find(label);
    if (it == report.final_checks.end()) {
      flag("missing final check '" + label + "'");
      continue;
    }
    if (!it->second.holds || it->second.lhs < it->second.rhs) {
      flag("final check '" + label + "' fails");
    }
  }

  // Mutual disjointness of absorbed sets, frontiers and the overlap; and
  // absorbed sets stay inside the head set.
  std::vector<std::span<const Index>> families;
  families.emplace_back(report.p0.frontier);
  families.emplace_back(report.p0.overlap);
  for (const auto& step : report.steps) {
    families.emplace_back(step.absorbed);
    families.emplace_back(step.frontier);
  }
  for (std::size_t i = 0; i < families.size(); ++i) {
    for (std::size_t j = i + 1; j < families.size(); ++j) {
      if (!disjoint(families[i], families[j])) {
        flag("set families " + std::to_string(i) + " and " + std::to_string(j) +
             " are not disjoint");
      }
    }
  }
  for (std::size_t l = 0; l < report.steps.size(); ++l) {
    if (!std::includes(report.p0.head.begin(), report.p0.head.end(),
                       report.steps[l].absorbed.begin(), report.steps[l].absorbed.end())) {
      flag("absorbed set of step " + std::to_string(l + 1) + " leaves the head set");
    }
  }

  // Support separation: frontier l only meets the supports of y_l and
  // y_{l+1} (y_0 = x over S1, y_l over the activated set of step l).
  std::vector<std::vector<Index>> supports;
  supports.push_back(expand_over(report.instance.alpha, report.instance.s1).support());
  for (const auto& step : report.steps) {
    supports.push_back(expand_over(report.instance.alpha, step.activated).support());
  }
  auto frontier_of = [&](std::size_t i) -> std::span<const Index> {
    return i == 0 ? std::span<const Index>(report.p0.frontier)
                  : std::span<const Index>(report.steps[i - 1].frontier);
  };
  for (std::size_t i = 0; i <= report.k; ++i) {
    for (std::size_t j = 0; j <= report.k; ++j) {
      if (j == i || j == i + 1) continue;
      if (!disjoint(frontier_of(i), supports[j])) {
        flag("frontier " + std::to_string(i) + " meets the support of y_" + std::to_string(j));
      }
    }
  }

  // Termination growth: the minimum frontier index more than doubles.
  for (std::size_t i = 1; i <= report.k; ++i) {
    auto prev = frontier_of(i - 1);
    auto cur = frontier_of(i);
    if (!cur.empty() && !prev.empty() && cur.front() < 2 * prev.front() + 1) {
      flag("frontier minimum fails to double at step " + std::to_string(i));
    }
  }

  // The trace and the direct evaluation must agree on the main inequality.
  MainInequality direct = check_inequality(report.instance);
  auto main_it = report.final_checks.find("main");
  if (main_it != report.final_checks.end() &&
      (main_it->second.lhs != direct.lhs || main_it->second.rhs != direct.rhs)) {
    flag("trace and direct evaluation disagree on the main inequality");
  }
  return violations;
}

std::vector<Rational> dyadic_grid() {
  std::vector<Rational> grid;
  Rational value(1);
  for (int k = 0; k <= 4; ++k) {
    grid.push_back(value);
    grid.push_back(-value);
    value /= 2;
  }
  return grid;
}

Instance random_instance(const InstanceConfig& config, std::uint64_t trial) {
  if (config.max_index < 1) {
    throw Error("InvalidArgument", "max_index must be positive");
  }
  const std::vector<Rational>& grid = config.grid;
  if (grid.empty()) {
    throw Error("InvalidArgument", "instance grid must be nonempty");
  }
  Rng rng = trial_rng(config.seed, trial);
  std::size_t size1 = static_cast<std::size_t>(rng.below(config.max_s1 + 1));
  std::size_t size2 = static_cast<std::size_t>(rng.below(config.max_s2 + 1));
  std::size_t total = std::min<std::size_t>(size1 + size2,
                                            static_cast<std::size_t>(config.max_index));
  size1 = std::min(size1, total);
  size2 = total - size1;

  std::vector<Index> indices =
      rng.sample_distinct(total, static_cast<std::uint64_t>(config.max_index));
  // Unbiased assignment of which indices go to S1.
  for (std::size_t i = indices.size(); i > 1; --i) {
    std::swap(indices[i - 1], indices[static_cast<std::size_t>(rng.below(i))]);
  }
  std::vector<Index> s1(indices.begin(), indices.begin() + size1);
  std::vector<Index> s2(indices.begin() + size1, indices.end());

  std::vector<CoeffMap::Entry> entries;
  entries.reserve(total);
  Rational min_s1(-1);
  for (Index i : s1) {
    Rational value = grid[rng.below(grid.size())];
    while (value == 0) value = grid[rng.below(grid.size())];
    if (min_s1 < 0 || abs(value) < min_s1) min_s1 = abs(value);
    entries.emplace_back(i, std::move(value));
  }
  // S2 magnitudes must not exceed the smallest S1 magnitude.
  std::vector<Rational> tail_grid;
  for (const Rational& g : grid) {
    if (g != 0 && (min_s1 < 0 || abs(g) <= min_s1)) tail_grid.push_back(g);
  }
  if (tail_grid.empty()) tail_grid.push_back(min_s1);
  for (Index i : s2) {
    entries.emplace_back(i, tail_grid[rng.below(tail_grid.size())]);
  }
  return Instance::make(std::move(s1), std::move(s2),
                        CoeffMap::from_entries(std::move(entries)));
}

}  // namespace qgl1
