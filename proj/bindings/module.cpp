// Python bindings. Rationals cross the boundary as exact "p/q" strings and
// vectors as {index: "p/q"} dicts, so no precision is lost; the qgl1 package
// wraps these with fractions.Fraction conveniences.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgl1/certify.hpp"
#include "qgl1/direct_sum.hpp"
#include "qgl1/dual_bounds.hpp"
#include "qgl1/generators.hpp"
#include "qgl1/greedy.hpp"
#include "qgl1/lindenstrauss.hpp"
#include "qgl1/report_json.hpp"
#include "qgl1/reporting.hpp"
#include "qgl1/serialize.hpp"

namespace py = pybind11;
using namespace qgl1;

namespace {

template <class Tag>
FlatMap<Tag> map_from_dict(const py::dict& d) {
  std::vector<typename FlatMap<Tag>::Entry> entries;
  entries.reserve(d.size());
  for (const auto& [key, value] : d) {
    entries.emplace_back(py::cast<Index>(key), parse_rational(py::cast<std::string>(value)));
  }
  return FlatMap<Tag>::from_entries(std::move(entries));
}

template <class Tag>
py::dict dict_from_map(const FlatMap<Tag>& m) {
  py::dict out;
  for (const auto& [index, value] : m.entries()) {
    out[py::int_(index)] = to_string(value);
  }
  return out;
}

DSVec ds_from_dict(const py::dict& d) {
  std::vector<DSVec::Block> blocks;
  blocks.reserve(d.size());
  for (const auto& [key, value] : d) {
    blocks.emplace_back(py::cast<Index>(key), map_from_dict<BasisTag>(py::cast<py::dict>(value)));
  }
  return DSVec::from_blocks(std::move(blocks));
}

py::dict dict_from_ds(const DSVec& y) {
  py::dict out;
  for (const auto& [n, coeffs] : y.blocks()) {
    out[py::int_(n)] = dict_from_map(coeffs);
  }
  return out;
}

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

Instance make_instance(const std::vector<Index>& s1, const std::vector<Index>& s2,
                       const py::dict& alpha) {
  return Instance::make(s1, s2, map_from_dict<BasisTag>(alpha));
}

std::vector<Rational> parse_grid(const std::vector<std::string>& grid) {
  std::vector<Rational> out;
  out.reserve(grid.size());
  for (const auto& g : grid) out.push_back(parse_rational(g));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact rational computations for a tree-structured conditional "
            "quasi-greedy basis of l1";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("basis_vector", [](Index i) { return dict_from_map(basis_vector(i)); }, py::arg("i"));
  m.def("dual_vector", [](Index i) { return dict_from_map(dual_vector(i)); }, py::arg("i"));
  m.def("alpha_chain", [](Index i) { return alpha_chain(i).entries; }, py::arg("i"));
  m.def("parent", [](Index j) -> py::object {
    auto p = parent(j);
    return p ? py::cast(*p) : py::none();
  }, py::arg("j"));
  m.def("level", &level, py::arg("i"));
  m.def("level_weights", [](int n) { return dict_from_map(level_weights(n)); }, py::arg("n"));

  m.def("l1_norm", [](const py::dict& v) { return to_string(l1_norm(map_from_dict<CoordTag>(v))); },
        py::arg("vec"));
  m.def("sup_norm",
        [](const py::dict& v) { return to_string(sup_norm(map_from_dict<CoordTag>(v))); },
        py::arg("vec"));
  m.def("pairing",
        [](const py::dict& f, const py::dict& v) {
          return to_string(pairing(map_from_dict<CoordTag>(f), map_from_dict<CoordTag>(v)));
        },
        py::arg("functional"), py::arg("vec"));
  m.def("linear_combine",
        [](const std::vector<std::pair<std::string, py::dict>>& terms) {
          std::vector<std::pair<Rational, SparseVec>> converted;
          converted.reserve(terms.size());
          for (const auto& [c, v] : terms) {
            converted.emplace_back(parse_rational(c), map_from_dict<CoordTag>(v));
          }
          return dict_from_map(linear_combine(converted));
        },
        py::arg("terms"));
  m.def("restrict",
        [](const py::dict& v, const std::vector<Index>& keep) {
          return dict_from_map(restrict_to(map_from_dict<CoordTag>(v), keep));
        },
        py::arg("vec"), py::arg("indices"));
  m.def("vector_json",
        [](const py::dict& v) { return dump_line(to_json(map_from_dict<CoordTag>(v))); },
        py::arg("vec"), "Canonical byte-exact serialization of a vector dict");

  m.def("expand", [](const py::dict& c) { return dict_from_map(expand(map_from_dict<BasisTag>(c))); },
        py::arg("coeffs"));
  m.def("analyze",
        [](const py::dict& v, Index n) {
          return dict_from_map(analyze(map_from_dict<CoordTag>(v), n));
        },
        py::arg("vec"), py::arg("n"));

  m.def("greedy_sets",
        [](const py::dict& c, std::size_t m, std::size_t cap) {
          GreedySets sets = greedy_sets(map_from_dict<BasisTag>(c), m, cap);
          py::dict out;
          out["canonical"] = sets.canonical.indices;
          out["count"] = sets.count;
          out["enumerated"] = sets.enumerated;
          py::list all;
          for (const auto& sel : sets.all) all.append(sel.indices);
          out["all"] = all;
          return out;
        },
        py::arg("coeffs"), py::arg("m"), py::arg("cap") = kDefaultSelectionCap);
  m.def("greedy_operator",
        [](const py::dict& c, std::size_t m, const std::vector<Index>& selection) {
          GreedySelection sel;
          sel.indices = selection;
          return dict_from_map(greedy_operator(map_from_dict<BasisTag>(c), m, sel));
        },
        py::arg("coeffs"), py::arg("m"), py::arg("selection"));
  m.def("qg_ratio",
        [](const py::dict& c, std::size_t m) {
          return to_string(qg_ratio(map_from_dict<BasisTag>(c), m));
        },
        py::arg("coeffs"), py::arg("m"));
  m.def("qg_search",
        [](Index max_index, std::size_t support_size, const std::vector<std::string>& grid,
           std::uint64_t trials, std::uint64_t seed, unsigned threads) {
          QGSearchConfig config;
          config.max_index = max_index;
          config.support_size = support_size;
          config.grid = parse_grid(grid);
          config.trials = trials;
          config.seed = seed;
          config.threads = threads;
          return json_to_py(qg_report_to_json(qg_lower_bound_search(config)));
        },
        py::arg("max_index"), py::arg("support_size"), py::arg("grid"), py::arg("trials") = 0,
        py::arg("seed") = 0, py::arg("threads") = 1);
  m.def("ucc_constants",
        [](std::size_t m) { return json_to_py(ucc_report_to_json(ucc_constants(m))); },
        py::arg("m"));
  m.def("conditionality_witness",
        [](int n) { return json_to_py(conditionality_to_json(conditionality_witness(n))); },
        py::arg("n"));

  m.def("partition_support", [](const std::vector<Index>& s1) {
    Partition p = partition_support(s1);
    py::dict out;
    out["head"] = p.head;
    out["frontier"] = p.frontier;
    out["overlap"] = p.overlap;
    return out;
  }, py::arg("s1"));
  m.def("check_inequality",
        [](const std::vector<Index>& s1, const std::vector<Index>& s2, const py::dict& alpha) {
          MainInequality result = check_inequality(make_instance(s1, s2, alpha));
          py::dict out;
          out["lhs"] = to_string(result.lhs);
          out["rhs"] = to_string(result.rhs);
          out["slack"] = to_string(result.slack);
          return out;
        },
        py::arg("s1"), py::arg("s2"), py::arg("alpha"));
  m.def("trace_chain",
        [](const std::vector<Index>& s1, const std::vector<Index>& s2, const py::dict& alpha) {
          TraceReport report = trace_chain(make_instance(s1, s2, alpha));
          Json certificate = trace_report_to_json(report);
          certificate["violations"] = trace_violations(report);
          return json_to_py(certificate);
        },
        py::arg("s1"), py::arg("s2"), py::arg("alpha"));
  m.def("verify_random_instances",
        [](std::uint64_t trials, std::uint64_t seed, Index max_index, std::size_t s1_max,
           std::size_t s2_max, unsigned threads) {
          InstanceConfig config;
          config.max_index = max_index;
          config.max_s1 = s1_max;
          config.max_s2 = s2_max;
          config.grid = dyadic_grid();
          config.seed = seed;
          auto records = run_trials(trials, threads, [&](std::uint64_t trial) {
            TrialRecord record;
            TraceReport report = trace_chain(random_instance(config, trial));
            record.ok = trace_violations(report).empty();
            record.stages = report.k;
            const IneqCheck& main_check = report.final_checks.at("main");
            if (main_check.lhs > 0) record.ratio = main_check.rhs / (main_check.lhs / 3);
            return record;
          });
          return json_to_py(summary_to_json(summarize(records)));
        },
        py::arg("trials"), py::arg("seed") = 0, py::arg("max_index") = 60,
        py::arg("s1_max") = 10, py::arg("s2_max") = 10, py::arg("threads") = 1);

  m.def("ds_norm", [](const py::dict& y) { return to_string(ds_norm(ds_from_dict(y))); },
        py::arg("vec"));
  m.def("ds_greedy",
        [](const py::dict& y, std::size_t m) {
          DSGreedyResult result = ds_greedy(ds_from_dict(y), m);
          py::dict out;
          out["kept"] = dict_from_ds(result.kept);
          py::list counts;
          for (const auto& [block, size] : result.block_counts) {
            counts.append(py::make_tuple(block, size));
          }
          out["block_counts"] = counts;
          return out;
        },
        py::arg("vec"), py::arg("m"));
  m.def("ds_qg_ratio",
        [](const py::dict& y, std::size_t m) { return to_string(ds_qg_ratio(ds_from_dict(y), m)); },
        py::arg("vec"), py::arg("m"));
  m.def("flatten", [](Index block, Index inner) { return flatten(GlobalIndex{block, inner}); },
        py::arg("block"), py::arg("inner"));
  m.def("unflatten", [](Index flat) {
    GlobalIndex g = unflatten(flat);
    return py::make_tuple(g.block, g.inner);
  }, py::arg("flat"));

  m.def("z_vector", [](int n) { return dict_from_map(z_vector(n)); }, py::arg("n"));
  m.def("alternating_dual_norm", [](int n) { return to_string(alternating_dual_norm(n)); },
        py::arg("n"));
  m.def("growth_table", [](int n_max) {
    py::list rows;
    for (const GrowthRow& row : growth_table(n_max)) {
      rows.append(json_to_py(growth_row_to_json(row)));
    }
    return rows;
  }, py::arg("n_max"));
  m.def("dual_norm_upper",
        [](const py::dict& c) { return to_string(dual_norm_upper(map_from_dict<BasisTag>(c))); },
        py::arg("coeffs"));
  m.def("dual_norm_lower",
        [](const py::dict& c, const std::vector<py::dict>& witnesses) {
          std::vector<CoeffMap> converted;
          converted.reserve(witnesses.size());
          for (const auto& w : witnesses) converted.push_back(map_from_dict<BasisTag>(w));
          return to_string(dual_norm_lower(map_from_dict<BasisTag>(c), converted));
        },
        py::arg("coeffs"), py::arg("witnesses"));
  m.def("default_dual_witnesses", [](Index max_basis_index) {
    py::list out;
    for (const CoeffMap& w : default_dual_witnesses(max_basis_index)) {
      out.append(dict_from_map(w));
    }
    return out;
  }, py::arg("max_basis_index"));
  m.def("dual_norm_exact",
        [](const py::dict& c, int n) {
          return to_string(dual_norm_exact_fn(map_from_dict<BasisTag>(c), n));
        },
        py::arg("coeffs"), py::arg("n"));

#ifdef QGL1_VERSION
  m.attr("__version__") = QGL1_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
