#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "tdecomp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "tdecomp: ranked enumeration of minimal triangulations / proper tree "
      "decompositions by monotone bag costs"};

  std::string mode = "enumerate";
  std::string cost = "fill";
  std::string format = "text";
  std::string input;
  std::string input_format;
  std::string gnp;
  tdecomp::RunConfig config;

  app.add_option("input", input, "input graph file (.gr, .col, or edge list)");
  app.add_option("--mode", mode, "enumerate | optimize | stats | oracle")
      ->envname("TDECOMP_MODE");
  app.add_option("--cost", cost,
                 "width | fill | lexwf | wwidth:<file> | wfill:<file>")
      ->envname("TDECOMP_COST");
  app.add_option("--width-bound", config.width_bound,
                 "restrict to triangulations of width <= b")
      ->envname("TDECOMP_WIDTH_BOUND");
  app.add_option("--max-results", config.max_results,
                 "stop after this many results")
      ->envname("TDECOMP_MAX_RESULTS");
  app.add_option("--time-limit", config.time_limit_seconds,
                 "enumeration wall-time limit in seconds")
      ->envname("TDECOMP_TIME_LIMIT");
  app.add_option("--format", format, "text | jsonl | csv")
      ->envname("TDECOMP_FORMAT");
  app.add_flag("--emit-tree", config.emit_tree,
               "attach a clique tree to every result")
      ->envname("TDECOMP_EMIT_TREE");
  app.add_option("--seed", config.seed, "seed for --gnp")
      ->envname("TDECOMP_SEED");
  app.add_option("--gnp", gnp, "generate a G(n,p) input, e.g. --gnp 20,0.5")
      ->envname("TDECOMP_GNP");
  app.add_option("--input-format", input_format, "gr | col | edges")
      ->envname("TDECOMP_INPUT_FORMAT");
  app.add_option("--minsep-budget", config.minsep_budget_seconds,
                 "separator-stage time budget in seconds")
      ->envname("TDECOMP_MINSEP_BUDGET");
  app.add_option("--pmc-budget", config.pmc_budget_seconds,
                 "PMC-stage time budget in seconds")
      ->envname("TDECOMP_PMC_BUDGET");
  app.add_option("--minsep-max", config.minsep_budget_items,
                 "separator-stage item budget")
      ->envname("TDECOMP_MINSEP_MAX");
  app.add_option("--pmc-max", config.pmc_budget_items,
                 "PMC-stage item budget")
      ->envname("TDECOMP_PMC_MAX");
  app.add_flag("--skip-pmc", config.skip_pmcs,
               "stats mode: stop after the separator stage")
      ->envname("TDECOMP_SKIP_PMC");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return tdecomp::kExitParse;
  }

  auto m = tdecomp::parse_mode(mode);
  if (!m) {
    std::cerr << "unknown mode '" << mode << "'\n";
    return tdecomp::kExitParse;
  }
  config.mode = *m;
  auto f = tdecomp::parse_output_format(format);
  if (!f) {
    std::cerr << "unknown format '" << format << "'\n";
    return tdecomp::kExitParse;
  }
  config.format = *f;
  config.cost = cost;
  if (!input.empty()) config.input_path = input;
  if (!input_format.empty()) {
    auto gf = tdecomp::parse_format(input_format);
    if (!gf) {
      std::cerr << "unknown input format '" << input_format << "'\n";
      return tdecomp::kExitParse;
    }
    config.input_format = gf;
  }
  if (!gnp.empty()) {
    auto comma = gnp.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument(gnp);
      int n = std::stoi(gnp.substr(0, comma));
      double p = std::stod(gnp.substr(comma + 1));
      config.gnp = {n, p};
    } catch (const std::exception&) {
      std::cerr << "bad --gnp '" << gnp << "'; expected n,p\n";
      return tdecomp::kExitParse;
    }
  }

  return tdecomp::run(config, std::cout, std::cerr);
}
