#include "tdecomp/pmc.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "tdecomp/errors.hpp"

namespace tdecomp {

namespace {
using Clock = std::chrono::steady_clock;
}

PmcSet PmcSet::from_omegas(const Graph& g, std::vector<VertexSet> omegas) {
  std::sort(omegas.begin(), omegas.end());
  omegas.erase(std::unique(omegas.begin(), omegas.end()), omegas.end());
  PmcSet out;
  out.members_.reserve(omegas.size());
  for (auto& omega : omegas) {
    PmcInfo info;
    info.seps = minseps_of_pmc(g, omega);
    info.blocks = blocks_of_pmc(g, omega);
    info.omega = std::move(omega);
    out.members_.push_back(std::move(info));
  }
  return out;
}

bool PmcSet::contains(const VertexSet& omega) const {
  auto it = std::lower_bound(
      members_.begin(), members_.end(), omega,
      [](const PmcInfo& a, const VertexSet& b) { return a.omega < b; });
  return it != members_.end() && it->omega == omega;
}

std::vector<VertexSet> PmcSet::omegas() const {
  std::vector<VertexSet> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.omega);
  return out;
}

bool is_pmc(const Graph& g, const VertexSet& omega) {
  if (omega.empty()) return false;
  if (!omega.empty() &&
      (omega.min() < 0 || omega[omega.size() - 1] >= g.vertex_count())) {
    throw InvalidInputError("is_pmc: vertex id out of range");
  }
  std::vector<VertexSet> seps;
  for (const auto& c : components(g, omega)) {
    VertexSet n = neighborhood(g, c);
    if (n == omega) return false;  // full component
    seps.push_back(std::move(n));
  }
  // Completion test: every non-adjacent pair of omega must be covered by the
  // neighborhood of some component.
  for (int i = 0; i < omega.size(); ++i) {
    for (int j = i + 1; j < omega.size(); ++j) {
      if (g.adjacent(omega[i], omega[j])) continue;
      bool covered = false;
      for (const auto& s : seps) {
        if (s.contains(omega[i]) && s.contains(omega[j])) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
  }
  return true;
}

MinSepSet minseps_of_pmc(const Graph& g, const VertexSet& omega) {
  std::vector<VertexSet> seps;
  for (const auto& c : components(g, omega)) {
    seps.push_back(neighborhood(g, c));
  }
  return MinSepSet(std::move(seps));
}

std::vector<Block> blocks_of_pmc(const Graph& g, const VertexSet& omega) {
  std::vector<Block> out;
  for (auto& c : components(g, omega)) {
    VertexSet s = neighborhood(g, c);
    out.push_back(Block{std::move(s), std::move(c)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> pmcs_in_block(const PmcSet& pmcs, const Block& b) {
  VertexSet all = b.vertices();
  std::vector<VertexSet> out;
  for (const auto& info : pmcs) {
    if (b.s.is_strict_subset_of(info.omega) && info.omega.is_subset_of(all)) {
      out.push_back(info.omega);
    }
  }
  return out;
}

namespace {

struct PmcBudgetState {
  Clock::time_point start;
  const Budget* budget;
  std::vector<VertexSet> completed;  // PMCs of fully processed components

  bool over_time() const {
    return budget->time_limit_seconds &&
           std::chrono::duration<double>(Clock::now() - start).count() >
               *budget->time_limit_seconds;
  }
  bool over_count(std::size_t in_flight) const {
    return budget->max_items &&
           completed.size() + in_flight > *budget->max_items;
  }
  [[noreturn]] void fail() const {
    std::vector<std::vector<int>> raw;
    raw.reserve(completed.size());
    for (const auto& s : completed) raw.push_back(s.ids());
    std::sort(raw.begin(), raw.end());
    throw BudgetExceededError(
        BudgetExceededError::Stage::PotentialMaximalCliques, std::move(raw),
        "PMC enumeration budget exceeded");
  }
};

// Remaining wall time as a budget for nested separator enumeration.
Budget remaining(const PmcBudgetState& state) {
  Budget b;
  if (state.budget->time_limit_seconds) {
    double used =
        std::chrono::duration<double>(Clock::now() - state.start).count();
    b.time_limit_seconds = std::max(0.0, *state.budget->time_limit_seconds - used);
  }
  return b;
}

// PMC(comp_graph) via one-vertex-at-a-time lifting. `order[k]` is the vertex
// inserted at step k. `final_seps` is MinSep(comp_graph), reused at the last
// step instead of re-enumerating.
std::vector<VertexSet> pmcs_of_component(const Graph& cg,
                                         const std::vector<int>& order,
                                         const MinSepSet& final_seps,
                                         PmcBudgetState& state) {
  int n = cg.vertex_count();
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(order[i])] = i;

  // Relabel so step i works on vertices 0..i-1.
  std::vector<std::pair<int, int>> redges;
  for (const auto& [u, v] : cg.edges()) {
    redges.emplace_back(rank[static_cast<std::size_t>(u)],
                        rank[static_cast<std::size_t>(v)]);
  }
  Graph rg(n, redges);

  std::vector<VertexSet> prev{VertexSet{0}};
  for (int i = 2; i <= n; ++i) {
    int a = i - 1;
    std::vector<std::pair<int, int>> pedges;
    for (const auto& [u, v] : rg.edges()) {
      if (u < i && v < i) pedges.emplace_back(u, v);
    }
    Graph gi(i, pedges);

    MinSepSet cur_seps;
    if (i == n) {
      std::vector<VertexSet> translated;
      for (const auto& s : final_seps) {
        std::vector<int> ids;
        ids.reserve(static_cast<std::size_t>(s.size()));
        for (int v : s) ids.push_back(rank[static_cast<std::size_t>(v)]);
        translated.emplace_back(std::move(ids));
      }
      cur_seps = MinSepSet(std::move(translated));
    } else {
      cur_seps = enumerate_min_seps(gi, remaining(state));
    }

    std::unordered_set<VertexSet, VertexSetHash> cands;
    cands.insert(VertexSet{a});
    for (const auto& omega : prev) {
      cands.insert(omega);
      cands.insert(omega.with(a));
    }
    for (const auto& s : cur_seps) {
      cands.insert(s.with(a));
    }
    for (const auto& s : cur_seps) {
      auto comps = components(gi, s);
      for (const auto& t : cur_seps) {
        if (t == s) continue;
        for (const auto& c : comps) {
          VertexSet x = VertexSet::intersect(t, c);
          if (!x.empty()) cands.insert(VertexSet::unite(s, x));
        }
      }
      if (state.over_time()) state.fail();
    }

    std::vector<VertexSet> next;
    for (const auto& cand : cands) {
      if (is_pmc(gi, cand)) next.push_back(cand);
      if (state.over_count(next.size())) state.fail();
    }
    if (state.over_time()) state.fail();
    std::sort(next.begin(), next.end());
    prev = std::move(next);
  }

  // Back to component-graph ids.
  std::vector<VertexSet> out;
  out.reserve(prev.size());
  for (const auto& omega : prev) {
    std::vector<int> ids;
    ids.reserve(static_cast<std::size_t>(omega.size()));
    for (int v : omega) ids.push_back(order[static_cast<std::size_t>(v)]);
    out.emplace_back(std::move(ids));
  }
  return out;
}

}  // namespace

PmcSet enumerate_pmcs_with_order(const Graph& g, const MinSepSet& seps,
                                 const std::vector<int>& order,
                                 const Budget& budget) {
  if (static_cast<int>(order.size()) != g.vertex_count()) {
    throw InvalidInputError("enumerate_pmcs: order must cover every vertex");
  }
  PmcBudgetState state{Clock::now(), &budget, {}};

  for (const auto& comp : components(g, VertexSet{})) {
    auto sub = induced_subgraph(g, comp);

    // Component-local insertion order, following the global order.
    std::vector<int> local_order;
    local_order.reserve(static_cast<std::size_t>(comp.size()));
    for (int v : order) {
      if (!comp.contains(v)) continue;
      int local = static_cast<int>(
          std::lower_bound(sub.original_ids.begin(), sub.original_ids.end(),
                           v) -
          sub.original_ids.begin());
      local_order.push_back(local);
    }

    // Global separators living inside this component, in local ids.
    std::vector<VertexSet> local_seps;
    for (const auto& s : seps) {
      if (s.empty() || !s.is_subset_of(comp)) continue;
      std::vector<int> ids;
      for (int v : s) {
        ids.push_back(static_cast<int>(
            std::lower_bound(sub.original_ids.begin(),
                             sub.original_ids.end(), v) -
            sub.original_ids.begin()));
      }
      local_seps.emplace_back(std::move(ids));
    }

    auto local_pmcs = pmcs_of_component(sub.graph, local_order,
                                        MinSepSet(std::move(local_seps)),
                                        state);
    for (const auto& omega : local_pmcs) {
      std::vector<int> ids;
      ids.reserve(static_cast<std::size_t>(omega.size()));
      for (int v : omega) {
        ids.push_back(sub.original_ids[static_cast<std::size_t>(v)]);
      }
      state.completed.emplace_back(std::move(ids));
    }
    if (state.over_count(0)) state.fail();
  }

  return PmcSet::from_omegas(g, std::move(state.completed));
}

PmcSet enumerate_pmcs(const Graph& g, const MinSepSet& seps,
                      const Budget& budget) {
  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    order[static_cast<std::size_t>(v)] = v;
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) < g.degree(b);
  });
  return enumerate_pmcs_with_order(g, seps, order, budget);
}

}  // namespace tdecomp
