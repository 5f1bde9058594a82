#include "tdecomp/stats.hpp"

#include <chrono>

#include "tdecomp/errors.hpp"
#include "tdecomp/pmc.hpp"

namespace tdecomp {

std::string to_string(StatsClass c) {
  switch (c) {
    case StatsClass::Terminated:
      return "terminated";
    case StatsClass::MsTerminated:
      return "ms-terminated";
    case StatsClass::NotTerminated:
      return "not-terminated";
  }
  return "?";
}

GraphStats compute_stats(const Graph& g, const StatsOptions& options) {
  using Clock = std::chrono::steady_clock;
  GraphStats stats;
  stats.n = g.vertex_count();
  stats.m = g.edge_count();

  auto t0 = Clock::now();
  MinSepSet seps;
  try {
    seps = enumerate_min_seps(g, options.sep_budget);
    stats.minseps_complete = true;
    stats.minsep_count = static_cast<std::uint64_t>(seps.size());
  } catch (const BudgetExceededError& e) {
    stats.minsep_count = static_cast<std::uint64_t>(e.partial().size());
  }
  stats.minsep_seconds =
      std::chrono::duration<double>(Clock::now() - t0).count();

  if (!stats.minseps_complete) {
    stats.classification = StatsClass::NotTerminated;
    return stats;
  }
  if (options.skip_pmcs) {
    stats.classification = StatsClass::Terminated;
    return stats;
  }

  auto t1 = Clock::now();
  try {
    PmcSet pmcs = enumerate_pmcs(g, seps, options.pmc_budget);
    stats.pmcs_complete = true;
    stats.pmc_count = static_cast<std::uint64_t>(pmcs.size());
  } catch (const BudgetExceededError&) {
    // partial PMC counts are not comparable across runs; report absence
  }
  stats.pmc_seconds = std::chrono::duration<double>(Clock::now() - t1).count();
  stats.classification =
      stats.pmcs_complete ? StatsClass::Terminated : StatsClass::MsTerminated;
  return stats;
}

}  // namespace tdecomp
