#ifndef TDECOMP_STATS_HPP
#define TDECOMP_STATS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "tdecomp/graph.hpp"
#include "tdecomp/separators.hpp"

namespace tdecomp {

// Feasibility classes of the separator/PMC precomputation.
enum class StatsClass {
  Terminated,     // both stages finished within budget
  MsTerminated,   // separators finished, PMCs did not
  NotTerminated,  // separators did not finish
};

std::string to_string(StatsClass c);

struct StatsOptions {
  // The stats defaults: one minute for separators, thirty for PMCs.
  Budget sep_budget{std::nullopt, 60.0};
  Budget pmc_budget{std::nullopt, 1800.0};
  bool skip_pmcs = false;
};

struct GraphStats {
  int n = 0;
  long long m = 0;
  std::uint64_t minsep_count = 0;
  bool minseps_complete = false;
  double minsep_seconds = 0;
  std::optional<std::uint64_t> pmc_count;  // absent when skipped or aborted
  bool pmcs_complete = false;
  double pmc_seconds = 0;
  StatsClass classification = StatsClass::NotTerminated;
};

// Runs the feasibility study on one graph: enumerate minimal separators,
// then PMCs, under the given budgets. Budget exhaustion is a classification
// outcome here, not an error. With skip_pmcs the classification covers the
// separator stage only.
GraphStats compute_stats(const Graph& g, const StatsOptions& options = {});

}  // namespace tdecomp

#endif  // TDECOMP_STATS_HPP
