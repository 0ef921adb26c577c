#include "qgl1/report_json.hpp"

#include <cstdio>

namespace qgl1 {

namespace {

Json index_list(std::span<const Index> indices) {
  Json out = Json::array();
  for (Index i : indices) out.push_back(i);
  return out;
}

std::vector<Index> index_list_from_json(const Json& array, const char* what) {
  if (!array.is_array()) {
    throw Error("BadJson", std::string(what) + " must be an array of indices");
  }
  std::vector<Index> out;
  out.reserve(array.size());
  for (const auto& v : array) {
    if (!v.is_number_integer()) {
      throw Error("BadJson", std::string(what) + " holds a non-integer entry");
    }
    out.push_back(v.get<Index>());
  }
  return out;
}

std::string approx(const Rational& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", to_double(value));
  return buffer;
}

}  // namespace

Json ds_vec_to_json(const DSVec& y) {
  Json out = Json::object();
  for (const auto& [n, coeffs] : y.blocks()) {
    out[std::to_string(n)] = to_json(coeffs);
  }
  return out;
}

DSVec ds_vec_from_json(const Json& object) {
  if (!object.is_object()) {
    throw Error("BadVector", "expected a JSON object of block -> coefficient map");
  }
  std::vector<DSVec::Block> blocks;
  blocks.reserve(object.size());
  for (const auto& [key, value] : object.items()) {
    blocks.emplace_back(parse_index_string(key), coeff_map_from_json(value));
  }
  return DSVec::from_blocks(std::move(blocks));
}

Json instance_to_json(const Instance& instance) {
  Json out = Json::object();
  out["s1"] = index_list(instance.s1);
  out["s2"] = index_list(instance.s2);
  out["alpha"] = to_json(instance.alpha);
  return out;
}

Instance instance_from_json(const Json& object) {
  if (!object.is_object() || !object.contains("s1") || !object.contains("s2") ||
      !object.contains("alpha")) {
    throw Error("BadJson", "instance needs s1, s2 and alpha fields");
  }
  return Instance::make(index_list_from_json(object["s1"], "s1"),
                        index_list_from_json(object["s2"], "s2"),
                        coeff_map_from_json(object["alpha"]));
}

Json trace_report_to_json(const TraceReport& report) {
  Json out = Json::object();
  out["instance"] = instance_to_json(report.instance);
  Json partition = Json::object();
  partition["head"] = index_list(report.p0.head);
  partition["frontier"] = index_list(report.p0.frontier);
  partition["overlap"] = index_list(report.p0.overlap);
  out["partition"] = partition;
  Json steps = Json::array();
  for (const auto& step : report.steps) {
    Json s = Json::object();
    s["activated"] = index_list(step.activated);
    s["absorbed"] = index_list(step.absorbed);
    s["frontier"] = index_list(step.frontier);
    s["star_lhs"] = to_string(step.star_lhs);
    s["star_rhs"] = to_string(step.star_rhs);
    steps.push_back(std::move(s));
  }
  out["steps"] = steps;
  out["k"] = report.k;
  Json checks = Json::object();
  for (const auto& label : kFinalCheckLabels) {
    const IneqCheck& check = report.final_checks.at(label);
    Json c = Json::object();
    c["lhs"] = to_string(check.lhs);
    c["rhs"] = to_string(check.rhs);
    c["holds"] = check.holds;
    checks[label] = std::move(c);
  }
  out["checks"] = checks;
  return out;
}

Json qg_report_to_json(const QGReport& report) {
  Json out = Json::object();
  out["ratio"] = to_string(report.ratio);
  out["bound"] = to_string(report.bound);
  Json witness = Json::object();
  witness["coeffs"] = to_json(report.witness.coeffs);
  witness["m"] = report.witness.m;
  witness["selection"] = index_list(report.witness.selection.indices);
  out["witness"] = witness;
  return out;
}

Json ucc_report_to_json(const UccReport& report) {
  Json out = Json::object();
  out["m"] = report.m;
  out["c_min"] = to_string(report.c_min);
  out["c_max"] = to_string(report.c_max);
  out["base_norm"] = to_string(report.base_norm);
  out["min_pattern"] = report.min_pattern;
  out["max_pattern"] = report.max_pattern;
  return out;
}

Json conditionality_to_json(const ConditionalityWitness& witness) {
  Json out = Json::object();
  out["n"] = witness.n;
  out["m_end"] = witness.signs.size();
  out["ratio"] = to_string(witness.ratio);
  out["flipped_norm"] = to_string(witness.flipped_norm);
  out["base_norm"] = to_string(witness.base_norm);
  out["signs"] = witness.signs;
  return out;
}

Json growth_row_to_json(const GrowthRow& row) {
  Json out = Json::object();
  out["n"] = row.n;
  out["m_end"] = row.m_end;
  out["alt_norm"] = to_string(row.alt_norm);
  out["witness_norm"] = to_string(row.witness_norm);
  out["pairing"] = to_string(row.pairing);
  out["lower_bound"] = to_string(row.lower_bound);
  return out;
}

Json summary_to_json(const Summary& summary) {
  Json out = Json::object();
  out["trials"] = summary.count;
  out["failures"] = summary.failures;
  out["max_ratio"] = to_string(summary.max_ratio);
  out["max_ratio_trial"] = summary.max_ratio_trial;
  out["max_stages"] = summary.max_stages;
  if (!summary.first_failure.empty()) out["first_failure"] = summary.first_failure;
  return out;
}

std::string growth_csv(std::span<const GrowthRow> rows) {
  std::string csv =
      "n,m_end,alt_norm,witness_norm,pairing,lower_bound,"
      "alt_norm_approx,witness_norm_approx,pairing_approx,lower_bound_approx\n";
  for (const GrowthRow& row : rows) {
    csv += std::to_string(row.n);
    csv += ',';
    csv += std::to_string(row.m_end);
    csv += ',';
    csv += to_string(row.alt_norm);
    csv += ',';
    csv += to_string(row.witness_norm);
    csv += ',';
    csv += to_string(row.pairing);
    csv += ',';
    csv += to_string(row.lower_bound);
    csv += ',';
    csv += approx(row.alt_norm);
    csv += ',';
    csv += approx(row.witness_norm);
    csv += ',';
    csv += approx(row.pairing);
    csv += ',';
    csv += approx(row.lower_bound);
    csv += '\n';
  }
  return csv;
}

}  // namespace qgl1
