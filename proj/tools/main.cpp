// Command-line front end: every library operation behind one binary with
// reproducible seeds, explicit size caps and structured (JSONL / CSV)
// output. Exit codes: 0 success, 1 contract violation (with the witness
// emitted first), 2 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "qgl1/certify.hpp"
#include "qgl1/direct_sum.hpp"
#include "qgl1/dual_bounds.hpp"
#include "qgl1/generators.hpp"
#include "qgl1/greedy.hpp"
#include "qgl1/lindenstrauss.hpp"
#include "qgl1/report_json.hpp"
#include "qgl1/reporting.hpp"
#include "qgl1/serialize.hpp"

namespace {

using namespace qgl1;

constexpr Index kMaxIndexCap = 10000;
constexpr int kConditionalityCap = 12;

[[noreturn]] void usage_error(const std::string& message) {
  throw Error("Usage", message);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json load_json(const std::string& path) { return parse_json(read_file(path)); }

std::vector<Index> parse_index_list(const std::string& text) {
  std::vector<Index> out;
  if (text.empty()) return out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      out.push_back(parse_index_string(item));
    } catch (const Error&) {
      usage_error("bad index '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

void emit(const Json& record) { std::cout << dump_line(record) << '\n'; }

void check_index_cap(Index i) {
  if (i > kMaxIndexCap) {
    usage_error("index " + std::to_string(i) + " exceeds the cap " +
                std::to_string(kMaxIndexCap));
  }
}

Json error_record(const Error& error) {
  Json record = Json::object();
  record["error"] = error.code();
  record["message"] = error.what();
  return record;
}

int run_gen_basis(Index i) {
  check_index_cap(i);
  emit(to_json(basis_vector(i)));
  return 0;
}

int run_gen_dual(Index i) {
  check_index_cap(i);
  emit(to_json(dual_vector(i)));
  return 0;
}

int run_expand(const std::string& coeffs_path) {
  emit(to_json(expand(coeff_map_from_json(load_json(coeffs_path)))));
  return 0;
}

int run_analyze(const std::string& vec_path, Index n) {
  check_index_cap(n);
  SparseVec v = sparse_vec_from_json(load_json(vec_path));
  try {
    emit(to_json(analyze(v, n)));
  } catch (const Error& error) {
    if (error.code() != "NotInSpan") throw;
    emit(error_record(error));
    return 1;
  }
  return 0;
}

int run_greedy(const std::string& coeffs_path, std::size_t m, bool all_selections) {
  CoeffMap coeffs = coeff_map_from_json(load_json(coeffs_path));
  GreedySets sets = greedy_sets(coeffs, m);
  Rational denom = coeffs.empty() ? Rational(1) : l1_norm(expand(coeffs));
  auto line = [&](const GreedySelection& selection) {
    CoeffMap kept = greedy_operator(coeffs, m, selection);
    Json record = Json::object();
    record["m"] = m;
    record["selection"] = selection.indices;
    record["canonical"] = selection.canonical;
    record["selection_count"] = sets.count;
    record["kept"] = to_json(kept);
    record["ratio"] = to_string(coeffs.empty() ? Rational(0) : l1_norm(expand(kept)) / denom);
    emit(record);
  };
  if (all_selections && sets.enumerated) {
    for (const auto& selection : sets.all) line(selection);
  } else {
    line(sets.canonical);
  }
  return 0;
}

QGSearchConfig parse_search_config(const Json& object) {
  QGSearchConfig config;
  if (!object.is_object()) usage_error("search config must be a JSON object");
  for (const auto& [key, value] : object.items()) {
    if (key == "max_index") {
      config.max_index = value.get<Index>();
    } else if (key == "support_size") {
      config.support_size = value.get<std::size_t>();
    } else if (key == "trials") {
      config.trials = value.get<std::uint64_t>();
    } else if (key == "seed") {
      config.seed = value.get<std::uint64_t>();
    } else if (key == "grid") {
      for (const auto& g : value) config.grid.push_back(parse_rational(g.get<std::string>()));
    } else {
      usage_error("unknown search config key '" + key + "'");
    }
  }
  if (config.grid.empty()) config.grid = dyadic_grid();
  return config;
}

int run_qg_search(const std::string& config_path, unsigned threads) {
  QGSearchConfig config = parse_search_config(load_json(config_path));
  config.threads = threads;
  QGReport report = qg_lower_bound_search(config);
  emit(qg_report_to_json(report));
  if (report.ratio > report.bound) {
    Json violation = Json::object();
    violation["error"] = "BoundViolated";
    violation["message"] = "observed greedy ratio exceeds the certified bound";
    violation["witness"] = qg_report_to_json(report);
    emit(violation);
    return 1;
  }
  return 0;
}

int run_ucc(std::size_t m) {
  emit(ucc_report_to_json(ucc_constants(m)));
  return 0;
}

int run_conditionality(int n) {
  if (n > kConditionalityCap) {
    usage_error("n exceeds the cap " + std::to_string(kConditionalityCap));
  }
  emit(conditionality_to_json(conditionality_witness(n)));
  return 0;
}

int run_trace(const std::string& s1_text, const std::string& s2_text,
              const std::string& alpha_path, const std::string& certificate_path) {
  std::vector<Index> s1 = parse_index_list(s1_text);
  std::vector<Index> s2 = parse_index_list(s2_text);
  for (Index i : s1) check_index_cap(i);
  for (Index i : s2) check_index_cap(i);
  Instance instance;
  try {
    instance = Instance::make(std::move(s1), std::move(s2),
                              coeff_map_from_json(load_json(alpha_path)));
  } catch (const Error& error) {
    if (error.code() != "PreconditionViolated") throw;
    emit(error_record(error));
    return 1;
  }
  TraceReport report = trace_chain(instance);
  Json certificate = trace_report_to_json(report);
  if (!certificate_path.empty()) {
    std::ofstream out(certificate_path, std::ios::binary);
    if (!out) usage_error("cannot write '" + certificate_path + "'");
    out << certificate.dump(2) << '\n';
  }
  std::vector<std::string> violations = trace_violations(report);
  const IneqCheck& main_check = report.final_checks.at("main");
  Json summary = Json::object();
  summary["k"] = report.k;
  summary["holds"] = violations.empty();
  summary["main_lhs"] = to_string(main_check.lhs);
  summary["main_rhs"] = to_string(main_check.rhs);
  emit(summary);
  if (!violations.empty()) {
    Json failure = Json::object();
    failure["error"] = "CertificateViolated";
    failure["violations"] = violations;
    failure["witness"] = certificate;
    emit(failure);
    return 1;
  }
  return 0;
}

int run_verify_theorem(std::uint64_t trials, std::uint64_t seed, Index max_index,
                       std::size_t s1_max, std::size_t s2_max, unsigned threads) {
  check_index_cap(max_index);
  InstanceConfig config;
  config.max_index = max_index;
  config.max_s1 = s1_max;
  config.max_s2 = s2_max;
  config.grid = dyadic_grid();
  config.seed = seed;

  std::vector<TrialRecord> records = run_trials(trials, threads, [&](std::uint64_t trial) {
    TrialRecord record;
    Instance instance = random_instance(config, trial);
    TraceReport report = trace_chain(instance);
    std::vector<std::string> violations = trace_violations(report);
    record.ok = violations.empty();
    record.stages = report.k;
    const IneqCheck& main_check = report.final_checks.at("main");
    if (main_check.lhs > 0) {
      // ||x|| / ||x+y||, certified to stay at or below 3.
      record.ratio = main_check.rhs / (main_check.lhs / 3);
    }
    if (!record.ok) {
      Json witness = Json::object();
      witness["violations"] = violations;
      witness["certificate"] = trace_report_to_json(report);
      record.witness = dump_line(witness);
    }
    return record;
  });

  Summary summary = summarize(records);
  Json out = summary_to_json(summary);
  out["seed"] = seed;
  out["max_index"] = max_index;
  emit(out);
  if (summary.failures > 0) {
    Json failure = Json::object();
    failure["error"] = "CertificateViolated";
    failure["witness"] = parse_json(summary.first_failure);
    emit(failure);
    return 1;
  }
  return 0;
}

int run_ds_norm(const std::string& vec_path) {
  DSVec y = ds_vec_from_json(load_json(vec_path));
  Json record = Json::object();
  record["norm"] = to_string(ds_norm(y));
  emit(record);
  return 0;
}

int run_ds_greedy(const std::string& vec_path, std::size_t m) {
  DSVec y = ds_vec_from_json(load_json(vec_path));
  DSGreedyResult result = ds_greedy(y, m);
  Json record = Json::object();
  record["m"] = m;
  record["kept"] = ds_vec_to_json(result.kept);
  Json counts = Json::array();
  for (const auto& [block, size] : result.block_counts) {
    counts.push_back(Json::array({block, size}));
  }
  record["block_counts"] = counts;
  record["ratio"] = to_string(y.empty() ? Rational(0) : ds_norm(result.kept) / ds_norm(y));
  emit(record);
  return 0;
}

int run_dual_growth(int n_max, const std::string& csv_path) {
  std::vector<GrowthRow> rows = growth_table(n_max);
  std::string csv = growth_csv(rows);
  std::cout << csv;
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) usage_error("cannot write '" + csv_path + "'");
    out << csv;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for the thresholding greedy operator on a "
               "tree-structured basis of l1"};
  app.require_subcommand(1);

  std::function<int()> action;

  Index gen_i = 1;
  auto* gen_basis = app.add_subcommand("gen-basis", "Print basis vector i");
  gen_basis->add_option("--i", gen_i, "Basis index")->required();
  gen_basis->callback([&] { action = [&] { return run_gen_basis(gen_i); }; });

  Index dual_i = 1;
  auto* gen_dual = app.add_subcommand("gen-dual", "Print dual representative i");
  gen_dual->add_option("--i", dual_i, "Basis index")->required();
  gen_dual->callback([&] { action = [&] { return run_gen_dual(dual_i); }; });

  std::string expand_path;
  auto* expand_cmd = app.add_subcommand("expand", "Expand a coefficient map file");
  expand_cmd->add_option("--coeffs", expand_path, "Coefficient map JSON file")->required();
  expand_cmd->callback([&] { action = [&] { return run_expand(expand_path); }; });

  std::string analyze_path;
  Index analyze_n = 1;
  auto* analyze_cmd = app.add_subcommand("analyze", "Recover coefficients of a vector file");
  analyze_cmd->add_option("--vec", analyze_path, "Vector JSON file")->required();
  analyze_cmd->add_option("--n", analyze_n, "Span bound")->required();
  analyze_cmd->callback([&] { action = [&] { return run_analyze(analyze_path, analyze_n); }; });

  std::string greedy_path;
  std::size_t greedy_m = 0;
  bool greedy_all = false;
  auto* greedy_cmd = app.add_subcommand("greedy", "Apply the thresholding greedy operator");
  greedy_cmd->add_option("--coeffs", greedy_path, "Coefficient map JSON file")->required();
  greedy_cmd->add_option("--m", greedy_m, "Number of kept coefficients")->required();
  greedy_cmd->add_flag("--all-selections", greedy_all, "Emit every valid selection");
  greedy_cmd->callback(
      [&] { action = [&] { return run_greedy(greedy_path, greedy_m, greedy_all); }; });

  std::string search_config_path;
  unsigned search_threads = 1;
  auto* search_cmd = app.add_subcommand("qg-search", "Search for large greedy ratios");
  search_cmd->add_option("--config", search_config_path, "Search config JSON file")->required();
  search_cmd->add_option("--threads", search_threads, "Worker threads");
  search_cmd->callback(
      [&] { action = [&] { return run_qg_search(search_config_path, search_threads); }; });

  std::size_t ucc_m = 1;
  auto* ucc_cmd = app.add_subcommand("ucc", "Sign-flip constants for constant coefficients");
  ucc_cmd->add_option("--m", ucc_m, "Number of leading basis vectors")->required();
  ucc_cmd->callback([&] { action = [&] { return run_ucc(ucc_m); }; });

  int cond_n = 1;
  auto* cond_cmd = app.add_subcommand("conditionality", "Level-alternating sign witness");
  cond_cmd->add_option("--n", cond_n, "Number of levels")->required();
  cond_cmd->callback([&] { action = [&] { return run_conditionality(cond_n); }; });

  std::string trace_s1, trace_s2, trace_alpha, trace_cert;
  auto* trace_cmd = app.add_subcommand("trace", "Replay the inequality chain on an instance");
  trace_cmd->add_option("--s1", trace_s1, "Comma-separated S1 indices");
  trace_cmd->add_option("--s2", trace_s2, "Comma-separated S2 indices");
  trace_cmd->add_option("--alpha", trace_alpha, "Coefficient JSON file")->required();
  trace_cmd->add_option("--emit-certificate", trace_cert, "Write the full certificate here");
  trace_cmd->callback([&] {
    action = [&] { return run_trace(trace_s1, trace_s2, trace_alpha, trace_cert); };
  });

  std::uint64_t verify_trials = 1000, verify_seed = 0;
  Index verify_max_index = 60;
  std::size_t verify_s1 = 10, verify_s2 = 10;
  unsigned verify_threads = 1;
  auto* verify_cmd = app.add_subcommand("verify-theorem",
                                        "Verify the inequality chain on random instances");
  verify_cmd->add_option("--trials", verify_trials, "Number of instances")->required();
  verify_cmd->add_option("--seed", verify_seed, "Run seed");
  verify_cmd->add_option("--max-index", verify_max_index, "Largest basis index drawn");
  verify_cmd->add_option("--s1-max", verify_s1, "Largest S1 size drawn");
  verify_cmd->add_option("--s2-max", verify_s2, "Largest S2 size drawn");
  verify_cmd->add_option("--threads", verify_threads, "Worker threads");
  verify_cmd->callback([&] {
    action = [&] {
      return run_verify_theorem(verify_trials, verify_seed, verify_max_index, verify_s1,
                                verify_s2, verify_threads);
    };
  });

  std::string ds_norm_path;
  auto* ds_norm_cmd = app.add_subcommand("ds-norm", "Norm of a direct-sum vector file");
  ds_norm_cmd->add_option("--vec", ds_norm_path, "Direct-sum vector JSON file")->required();
  ds_norm_cmd->callback([&] { action = [&] { return run_ds_norm(ds_norm_path); }; });

  std::string ds_greedy_path;
  std::size_t ds_greedy_m = 0;
  auto* ds_greedy_cmd = app.add_subcommand("ds-greedy", "Global greedy on a direct-sum vector");
  ds_greedy_cmd->add_option("--vec", ds_greedy_path, "Direct-sum vector JSON file")->required();
  ds_greedy_cmd->add_option("--m", ds_greedy_m, "Number of kept coefficients")->required();
  ds_greedy_cmd->callback(
      [&] { action = [&] { return run_ds_greedy(ds_greedy_path, ds_greedy_m); }; });

  int growth_n_max = 1;
  std::string growth_csv_path;
  auto* growth_cmd = app.add_subcommand("dual-growth", "Dual-sum growth table");
  growth_cmd->add_option("--n-max", growth_n_max, "Number of rows")->required();
  growth_cmd->add_option("--csv", growth_csv_path, "Also write the CSV here");
  growth_cmd->callback(
      [&] { action = [&] { return run_dual_growth(growth_n_max, growth_csv_path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  try {
    return action();
  } catch (const Error& error) {
    std::cerr << dump_line(error_record(error)) << '\n';
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  }
}
