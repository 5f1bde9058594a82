#include "tdecomp/cli.hpp"

#include <chrono>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tdecomp/enumerate.hpp"
#include "tdecomp/errors.hpp"
#include "tdecomp/oracle.hpp"
#include "tdecomp/stats.hpp"

namespace tdecomp {

namespace {

using nlohmann::json;

json cost_to_json(const CostValue& c) {
  if (c.is_infinite()) return "inf";
  if (c.parts().size() == 1) return c.parts()[0];
  return c.parts();
}

json sets_to_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s.ids());
  return out;
}

json edges_to_json(const std::vector<std::pair<int, int>>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back(json::array({u, v}));
  return out;
}

std::string sets_to_text(const std::vector<VertexSet>& sets) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) os << ' ';
    os << sets[i].to_string();
  }
  return os.str();
}

std::string sets_to_csv(const std::vector<VertexSet>& sets) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) os << '|';
    for (int j = 0; j < sets[i].size(); ++j) {
      if (j) os << ' ';
      os << sets[i][j];
    }
  }
  return os.str();
}

std::string edges_to_text(const std::vector<std::pair<int, int>>& edges) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) os << ' ';
    os << '{' << edges[i].first << ',' << edges[i].second << '}';
  }
  return os.str();
}

std::string edges_to_csv(const std::vector<std::pair<int, int>>& edges) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) os << '|';
    os << edges[i].first << ' ' << edges[i].second;
  }
  return os.str();
}

class RecordWriter {
 public:
  RecordWriter(std::ostream& out, OutputFormat format, bool emit_tree,
               const Graph& g)
      : out_(out), format_(format), emit_tree_(emit_tree), g_(g) {
    if (format_ == OutputFormat::Csv) {
      out_ << "index,cost,width,fill_count,elapsed_ms,delay_ms,"
              "optimizer_calls,bags,fill_edges\n";
    }
  }

  void write(const Emission& e) {
    switch (format_) {
      case OutputFormat::JsonLines: {
        json rec{{"index", e.index},
                 {"cost", cost_to_json(e.result.cost)},
                 {"width", e.result.width()},
                 {"fill_count", e.result.fill_count()},
                 {"elapsed_ms", e.elapsed_ms},
                 {"delay_ms", e.delay_ms},
                 {"optimizer_calls", e.optimizer_calls},
                 {"bags", sets_to_json(e.result.bags)},
                 {"fill_edges", edges_to_json(e.result.fill_edges)}};
        if (emit_tree_) {
          auto td = build_clique_tree(g_, e.result.bags);
          rec["tree"] = {{"nodes", sets_to_json(td.bags)},
                         {"edges", edges_to_json(td.edges)}};
        }
        out_ << rec.dump() << '\n';
        break;
      }
      case OutputFormat::Csv:
        out_ << e.index << ',' << e.result.cost.to_string() << ','
             << e.result.width() << ',' << e.result.fill_count() << ','
             << e.elapsed_ms << ',' << e.delay_ms << ',' << e.optimizer_calls
             << ',' << sets_to_csv(e.result.bags) << ','
             << edges_to_csv(e.result.fill_edges) << '\n';
        break;
      case OutputFormat::Text:
        out_ << '[' << e.index << "] cost=" << e.result.cost.to_string()
             << " width=" << e.result.width()
             << " fill=" << e.result.fill_count()
             << " bags=" << sets_to_text(e.result.bags);
        if (!e.result.fill_edges.empty()) {
          out_ << " fill_edges=" << edges_to_text(e.result.fill_edges);
        }
        out_ << '\n';
        if (emit_tree_) {
          auto td = build_clique_tree(g_, e.result.bags);
          out_ << "    tree: " << sets_to_text(td.bags)
               << " edges=" << edges_to_text(td.edges) << '\n';
        }
        break;
    }
  }

 private:
  std::ostream& out_;
  OutputFormat format_;
  bool emit_tree_;
  const Graph& g_;
};

Graph load_graph(const RunConfig& config) {
  if (config.gnp) {
    if (config.input_path) {
      throw InvalidInputError("give either an input file or --gnp, not both");
    }
    return gen_gnp(config.gnp->first, config.gnp->second, config.seed);
  }
  if (!config.input_path) {
    throw InvalidInputError("no input: give a file or --gnp n,p");
  }
  return read_graph(*config.input_path, config.input_format);
}

Budget make_budget(std::optional<std::uint64_t> items,
                   std::optional<double> seconds) {
  Budget b;
  b.max_items = items;
  b.time_limit_seconds = seconds;
  return b;
}

int stats_mode(const Graph& g, const RunConfig& config, std::ostream& out) {
  StatsOptions opts;
  if (config.minsep_budget_seconds) {
    opts.sep_budget.time_limit_seconds = config.minsep_budget_seconds;
  }
  if (config.minsep_budget_items) {
    opts.sep_budget.max_items = config.minsep_budget_items;
  }
  if (config.pmc_budget_seconds) {
    opts.pmc_budget.time_limit_seconds = config.pmc_budget_seconds;
  }
  if (config.pmc_budget_items) {
    opts.pmc_budget.max_items = config.pmc_budget_items;
  }
  opts.skip_pmcs = config.skip_pmcs;
  GraphStats stats = compute_stats(g, opts);

  if (config.format == OutputFormat::JsonLines) {
    json rec{{"n", stats.n},
             {"m", stats.m},
             {"minsep_count", stats.minsep_count},
             {"minseps_complete", stats.minseps_complete},
             {"minsep_seconds", stats.minsep_seconds},
             {"pmc_count", stats.pmc_count ? json(*stats.pmc_count) : json()},
             {"pmcs_complete", stats.pmcs_complete},
             {"pmc_seconds", stats.pmc_seconds},
             {"classification", to_string(stats.classification)}};
    out << rec.dump() << '\n';
  } else {
    out << "n=" << stats.n << " m=" << stats.m
        << " minseps=" << stats.minsep_count
        << (stats.minseps_complete ? "" : "+ (budget hit)")
        << " pmcs=";
    if (stats.pmc_count) {
      out << *stats.pmc_count;
    } else {
      out << (config.skip_pmcs ? "skipped" : "unknown (budget hit)");
    }
    out << " class=" << to_string(stats.classification) << '\n';
  }
  return kExitOk;
}

int oracle_mode(const Graph& g, const RunConfig& config, std::ostream& out) {
  MinSepSet seps = oracle::brute_min_seps(g);
  auto triangs = oracle::brute_min_triangs(g);
  if (config.format == OutputFormat::JsonLines) {
    json rec{{"minimal_separators", sets_to_json(seps.sets())},
             {"minimal_triangulations", json::array()}};
    for (const auto& t : triangs) {
      rec["minimal_triangulations"].push_back(
          {{"bags", sets_to_json(t.bags)},
           {"fill_edges", edges_to_json(t.fill)}});
    }
    out << rec.dump() << '\n';
  } else {
    out << "minimal separators (" << seps.size()
        << "): " << sets_to_text(seps.sets()) << '\n';
    out << "minimal triangulations (" << triangs.size() << "):\n";
    for (std::size_t i = 0; i < triangs.size(); ++i) {
      out << "  [" << i << "] bags=" << sets_to_text(triangs[i].bags)
          << " fill=" << edges_to_text(triangs[i].fill) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

std::optional<RunMode> parse_mode(const std::string& name) {
  if (name == "enumerate") return RunMode::Enumerate;
  if (name == "optimize") return RunMode::Optimize;
  if (name == "stats") return RunMode::Stats;
  if (name == "oracle") return RunMode::Oracle;
  return std::nullopt;
}

std::optional<OutputFormat> parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "jsonl" || name == "json-lines") return OutputFormat::JsonLines;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

BagCostPtr make_cost(const std::string& spec, const Graph& g) {
  if (spec == "width") return width_cost();
  if (spec == "fill") return fill_cost();
  if (spec == "lexwf") return lex_width_fill_cost();

  auto weight_file = [&](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open weight file '" + path + "'");
    return in;
  };
  auto resolve_vertex = [&](const std::string& token, int line) {
    if (g.has_labels()) {
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.label(v) == token) return v;
      }
    }
    long long v = -1;
    try {
      v = std::stoll(token);
    } catch (const std::exception&) {
      throw ParseError(line, "unknown vertex '" + token + "'");
    }
    if (v < 0 || v >= g.vertex_count()) {
      throw ParseError(line, "vertex '" + token + "' out of range");
    }
    return static_cast<int>(v);
  };

  if (spec.rfind("wwidth:", 0) == 0) {
    auto in = weight_file(spec.substr(7));
    std::vector<std::optional<double>> w(
        static_cast<std::size_t>(g.vertex_count()));
    std::optional<double> fallback;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream is(line);
      std::string a;
      double value;
      if (!(is >> a)) continue;
      if (a[0] == '#') continue;
      if (!(is >> value)) throw ParseError(lineno, "expected '<vertex> <weight>'");
      if (a == "default") {
        fallback = value;
      } else {
        w[static_cast<std::size_t>(resolve_vertex(a, lineno))] = value;
      }
    }
    std::vector<double> weights;
    weights.reserve(w.size());
    for (std::size_t v = 0; v < w.size(); ++v) {
      if (w[v]) {
        weights.push_back(*w[v]);
      } else if (fallback) {
        weights.push_back(*fallback);
      } else {
        throw InvalidInputError("wwidth: missing weight for vertex " +
                                g.label(static_cast<int>(v)));
      }
    }
    return weighted_width_cost(std::move(weights));
  }

  if (spec.rfind("wfill:", 0) == 0) {
    auto in = weight_file(spec.substr(6));
    EdgeWeights weights;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream is(line);
      std::string a, b;
      double value;
      if (!(is >> a)) continue;
      if (a[0] == '#') continue;
      if (a == "default") {
        if (!(is >> value)) throw ParseError(lineno, "expected 'default <weight>'");
        weights.fallback = value;
        continue;
      }
      if (!(is >> b >> value)) {
        throw ParseError(lineno, "expected '<u> <v> <weight>'");
      }
      weights.set(resolve_vertex(a, lineno), resolve_vertex(b, lineno), value);
    }
    return weighted_fill_cost(std::move(weights));
  }

  throw InvalidInputError("unknown cost '" + spec +
                          "' (width|fill|lexwf|wwidth:<file>|wfill:<file>)");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Graph g = load_graph(config);

    if (config.mode == RunMode::Stats) return stats_mode(g, config, out);
    if (config.mode == RunMode::Oracle) return oracle_mode(g, config, out);

    BagCostPtr cost = make_cost(config.cost, g);
    Budget sep_budget = make_budget(config.minsep_budget_items,
                                    config.minsep_budget_seconds);
    Budget pmc_budget =
        make_budget(config.pmc_budget_items, config.pmc_budget_seconds);
    // Separators, PMCs and blocks are computed once, up front; per-result
    // delays below exclude this initialization.
    auto init_start = std::chrono::steady_clock::now();
    Instance inst =
        config.width_bound
            ? Instance::build_bounded(g, *config.width_bound, sep_budget,
                                      pmc_budget)
            : Instance::build(g, sep_budget, pmc_budget);
    double init_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - init_start)
                         .count();

    RecordWriter writer(out, config.format, config.emit_tree, g);

    if (config.mode == RunMode::Optimize) {
      auto r = min_triang_opt(inst, *cost);
      if (!r || !r->feasible()) {
        err << "infeasible: no minimal triangulation"
            << (config.width_bound
                    ? " of width <= " + std::to_string(*config.width_bound)
                    : "")
            << '\n';
        return kExitInfeasible;
      }
      Emission e;
      e.index = 0;
      e.result = std::move(*r);
      e.optimizer_calls = 1;
      writer.write(e);
      return kExitOk;
    }

    EnumerationLimits limits;
    limits.max_results = config.max_results;
    limits.time_limit_seconds = config.time_limit_seconds;
    auto summary = ranked_triang(inst, cost,
                                 [&](const Emission& e) {
                                   writer.write(e);
                                   return true;
                                 },
                                 limits);
    err << "# results=" << summary.emitted
        << " exhausted=" << (summary.exhausted ? "yes" : "no")
        << " init_ms=" << init_ms << " elapsed_ms=" << summary.elapsed_ms
        << " optimizer_calls=" << summary.optimizer_calls << '\n';
    return kExitOk;
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidInputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace tdecomp
