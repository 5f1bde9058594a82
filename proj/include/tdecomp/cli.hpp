#ifndef TDECOMP_CLI_HPP
#define TDECOMP_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "tdecomp/cost.hpp"
#include "tdecomp/io.hpp"

namespace tdecomp {

enum class RunMode { Enumerate, Optimize, Stats, Oracle };
enum class OutputFormat { Text, JsonLines, Csv };

// Exit codes of run(): 0 ok, 1 internal error, 2 parse/input error,
// 3 budget exceeded, 4 infeasible.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInfeasible = 4;

struct RunConfig {
  RunMode mode = RunMode::Enumerate;

  // Input: a file, or a seeded G(n,p) sample.
  std::optional<std::string> input_path;
  std::optional<GraphFormat> input_format;  // default: by extension
  std::optional<std::pair<int, double>> gnp;
  std::uint64_t seed = 0;

  // width | fill | lexwf | wwidth:<file> | wfill:<file>
  std::string cost = "fill";
  std::optional<int> width_bound;

  std::optional<std::uint64_t> max_results;
  std::optional<double> time_limit_seconds;

  // Enumerate/optimize initialization budgets (default off); stats mode
  // defaults to 60 s separators / 1800 s PMCs unless overridden.
  std::optional<double> minsep_budget_seconds;
  std::optional<double> pmc_budget_seconds;
  std::optional<std::uint64_t> minsep_budget_items;
  std::optional<std::uint64_t> pmc_budget_items;
  bool skip_pmcs = false;  // stats mode: stop after the separator stage

  OutputFormat format = OutputFormat::Text;
  bool emit_tree = false;
};

std::optional<RunMode> parse_mode(const std::string& name);
std::optional<OutputFormat> parse_output_format(const std::string& name);

// Builds a bag cost from its CLI name; weight-file variants read
// "<vertex> <weight>" or "<u> <v> <weight>" lines ("default <weight>" sets a
// fallback) against the given graph's labels.
BagCostPtr make_cost(const std::string& spec, const Graph& g);

// Executes one configuration, streaming records to `out` and diagnostics to
// `err`. Returns an exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tdecomp

#endif  // TDECOMP_CLI_HPP
