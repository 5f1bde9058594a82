#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>
#include <optional>

#include "tdecomp/enumerate.hpp"
#include "tdecomp/errors.hpp"
#include "tdecomp/io.hpp"
#include "tdecomp/oracle.hpp"
#include "tdecomp/stats.hpp"

namespace py = pybind11;
using namespace tdecomp;

namespace {

std::vector<std::vector<int>> raw_sets(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.ids());
  return out;
}

py::object cost_to_py(const CostValue& c) {
  if (c.is_infinite()) {
    return py::float_(std::numeric_limits<double>::infinity());
  }
  if (c.parts().size() == 1) return py::float_(c.parts()[0]);
  py::list parts;
  for (double v : c.parts()) parts.append(v);
  return parts;
}

py::dict result_to_py(const TriangResult& r) {
  py::dict d;
  d["bags"] = raw_sets(r.bags);
  d["fill_edges"] = r.fill_edges;
  d["cost"] = cost_to_py(r.cost);
  d["width"] = r.width();
  d["feasible"] = r.feasible();
  return d;
}

BagCostPtr make_cost_py(const std::string& name,
                        const std::optional<std::vector<double>>& vertex_weights,
                        const std::optional<std::map<std::pair<int, int>, double>>&
                            edge_weights,
                        std::optional<double> edge_weight_default) {
  if (vertex_weights) return weighted_width_cost(*vertex_weights);
  if (edge_weights || edge_weight_default) {
    EdgeWeights w;
    w.fallback = edge_weight_default;
    if (edge_weights) {
      for (const auto& [e, value] : *edge_weights) {
        w.set(e.first, e.second, value);
      }
    }
    return weighted_fill_cost(std::move(w));
  }
  if (name == "width") return width_cost();
  if (name == "fill") return fill_cost();
  if (name == "lexwf") return lex_width_fill_cost();
  throw InvalidInputError("unknown cost '" + name + "'");
}

std::vector<VertexSet> to_sets(const std::vector<std::vector<int>>& raw) {
  std::vector<VertexSet> out;
  out.reserve(raw.size());
  for (const auto& ids : raw) out.emplace_back(ids);
  return out;
}

}  // namespace

PYBIND11_MODULE(tdecomp, m) {
  m.doc() =
      "Ranked enumeration of minimal triangulations (proper tree "
      "decompositions) by monotone bag costs";

  py::register_exception<InvalidInputError>(m, "InvalidInputError",
                                            PyExc_ValueError);
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError",
                                              PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<std::string>& labels) {
             return Graph(n, edges, labels);
           }),
           py::arg("n"), py::arg("edges"),
           py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("neighbors",
           [](const Graph& g, int v) { return g.neighbors(v); })
      .def("adjacent", &Graph::adjacent)
      .def("label", &Graph::label)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("gnp", &gen_gnp, py::arg("n"), py::arg("p"), py::arg("seed") = 0,
        "Seeded Erdős–Rényi graph");
  m.def(
      "read_graph",
      [](const std::string& path, const std::optional<std::string>& format) {
        std::optional<GraphFormat> f;
        if (format) {
          f = parse_format(*format);
          if (!f) throw InvalidInputError("unknown format '" + *format + "'");
        }
        return read_graph(path, f);
      },
      py::arg("path"), py::arg("format") = std::nullopt,
      "Read a .gr / .col / edge-list graph file");

  m.def("is_chordal", &is_chordal);
  m.def("is_connected", &is_connected);
  m.def("maximal_cliques", [](const Graph& g) {
    return raw_sets(maximal_cliques_chordal(g));
  });
  m.def("min_seps", [](const Graph& g) {
    return raw_sets(enumerate_min_seps(g).sets());
  });
  m.def("pmcs", [](const Graph& g) {
    return raw_sets(enumerate_pmcs(g, enumerate_min_seps(g)).omegas());
  });

  m.def(
      "optimize",
      [](const Graph& g, const std::string& cost,
         std::optional<int> width_bound,
         const std::optional<std::vector<double>>& vertex_weights,
         const std::optional<std::map<std::pair<int, int>, double>>&
             edge_weights,
         std::optional<double> edge_weight_default) -> py::object {
        auto k = make_cost_py(cost, vertex_weights, edge_weights,
                              edge_weight_default);
        auto inst = width_bound ? Instance::build_bounded(g, *width_bound)
                                : Instance::build(g);
        auto r = min_triang_opt(inst, *k);
        if (!r) return py::none();
        return result_to_py(*r);
      },
      py::arg("graph"), py::arg("cost") = "fill",
      py::arg("width_bound") = std::nullopt,
      py::arg("vertex_weights") = std::nullopt,
      py::arg("edge_weights") = std::nullopt,
      py::arg("edge_weight_default") = std::nullopt,
      "Minimum-cost minimal triangulation; None when a width bound is "
      "infeasible");

  m.def(
      "enumerate_triangulations",
      [](const Graph& g, const std::string& cost,
         std::optional<int> width_bound, std::optional<std::uint64_t> max_results,
         std::optional<double> time_limit,
         const std::optional<std::vector<double>>& vertex_weights,
         const std::optional<std::map<std::pair<int, int>, double>>&
             edge_weights,
         std::optional<double> edge_weight_default) {
        auto k = make_cost_py(cost, vertex_weights, edge_weights,
                              edge_weight_default);
        auto inst = width_bound ? Instance::build_bounded(g, *width_bound)
                                : Instance::build(g);
        EnumerationLimits limits;
        limits.max_results = max_results;
        limits.time_limit_seconds = time_limit;
        py::list results;
        auto summary = ranked_triang(inst, k,
                                     [&](const Emission& e) {
                                       py::dict d = result_to_py(e.result);
                                       d["index"] = e.index;
                                       d["elapsed_ms"] = e.elapsed_ms;
                                       d["delay_ms"] = e.delay_ms;
                                       d["optimizer_calls"] = e.optimizer_calls;
                                       results.append(d);
                                       return true;
                                     },
                                     limits);
        py::dict s;
        s["emitted"] = summary.emitted;
        s["exhausted"] = summary.exhausted;
        s["elapsed_ms"] = summary.elapsed_ms;
        s["optimizer_calls"] = summary.optimizer_calls;
        s["max_calls_between_emissions"] = summary.max_calls_between_emissions;
        return py::make_tuple(results, s);
      },
      py::arg("graph"), py::arg("cost") = "fill",
      py::arg("width_bound") = std::nullopt,
      py::arg("max_results") = std::nullopt,
      py::arg("time_limit") = std::nullopt,
      py::arg("vertex_weights") = std::nullopt,
      py::arg("edge_weights") = std::nullopt,
      py::arg("edge_weight_default") = std::nullopt,
      "Stream minimal triangulations by non-decreasing cost; returns "
      "(results, summary)");

  m.def(
      "clique_tree",
      [](const Graph& g, const std::vector<std::vector<int>>& bags) {
        auto td = build_clique_tree(g, to_sets(bags));
        py::dict d;
        d["nodes"] = raw_sets(td.bags);
        d["edges"] = td.edges;
        d["adhesions"] = raw_sets(adhesions(td).sets());
        d["valid"] = verify_tree_decomposition(g, td, true);
        return d;
      },
      py::arg("graph"), py::arg("bags"),
      "Clique tree (proper tree decomposition) over the given bags");

  m.def(
      "stats",
      [](const Graph& g, std::optional<double> sep_budget,
         std::optional<double> pmc_budget, bool skip_pmcs) {
        StatsOptions opts;
        opts.sep_budget.time_limit_seconds = sep_budget;
        opts.pmc_budget.time_limit_seconds = pmc_budget;
        opts.skip_pmcs = skip_pmcs;
        GraphStats s = compute_stats(g, opts);
        py::dict d;
        d["n"] = s.n;
        d["m"] = s.m;
        d["minsep_count"] = s.minsep_count;
        d["minseps_complete"] = s.minseps_complete;
        d["minsep_seconds"] = s.minsep_seconds;
        d["pmc_count"] = s.pmc_count ? py::cast(*s.pmc_count) : py::none();
        d["pmcs_complete"] = s.pmcs_complete;
        d["pmc_seconds"] = s.pmc_seconds;
        d["classification"] = to_string(s.classification);
        return d;
      },
      py::arg("graph"), py::arg("sep_budget") = 60.0,
      py::arg("pmc_budget") = 1800.0, py::arg("skip_pmcs") = false,
      "Separator/PMC feasibility statistics");

  auto oracle_mod = m.def_submodule("oracle", "brute-force reference answers");
  oracle_mod.def("min_seps", [](const Graph& g) {
    return raw_sets(oracle::brute_min_seps(g).sets());
  });
  oracle_mod.def("min_triangs", [](const Graph& g) {
    py::list out;
    for (const auto& t : oracle::brute_min_triangs(g)) {
      py::dict d;
      d["bags"] = raw_sets(t.bags);
      d["fill_edges"] = t.fill;
      out.append(d);
    }
    return out;
  });
}
