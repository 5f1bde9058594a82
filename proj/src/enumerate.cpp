#include "tdecomp/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <set>

#include "tdecomp/errors.hpp"

namespace tdecomp {

TreeDecomposition build_clique_tree(const Graph& g,
                                    const std::vector<VertexSet>& bags) {
  if (bags.empty()) {
    throw InvalidInputError("build_clique_tree: empty bag set");
  }
  (void)g;
  int q = static_cast<int>(bags.size());
  TreeDecomposition td;
  td.bags = bags;
  if (q == 1) return td;

  // Prim over the complete bag graph, maximizing intersection size.
  // Deterministic tie-breaking: smallest candidate index, earliest parent.
  std::vector<char> in_tree(static_cast<std::size_t>(q), 0);
  std::vector<int> best_w(static_cast<std::size_t>(q), -1);
  std::vector<int> best_from(static_cast<std::size_t>(q), 0);
  in_tree[0] = 1;
  for (int j = 1; j < q; ++j) {
    best_w[static_cast<std::size_t>(j)] =
        VertexSet::intersect(bags[0], bags[static_cast<std::size_t>(j)]).size();
  }
  for (int step = 1; step < q; ++step) {
    int pick = -1;
    for (int j = 0; j < q; ++j) {
      if (in_tree[static_cast<std::size_t>(j)]) continue;
      if (pick < 0 || best_w[static_cast<std::size_t>(j)] >
                          best_w[static_cast<std::size_t>(pick)]) {
        pick = j;
      }
    }
    in_tree[static_cast<std::size_t>(pick)] = 1;
    int from = best_from[static_cast<std::size_t>(pick)];
    td.edges.emplace_back(std::min(from, pick), std::max(from, pick));
    for (int j = 0; j < q; ++j) {
      if (in_tree[static_cast<std::size_t>(j)]) continue;
      int w = VertexSet::intersect(bags[static_cast<std::size_t>(pick)],
                                   bags[static_cast<std::size_t>(j)])
                  .size();
      if (w > best_w[static_cast<std::size_t>(j)]) {
        best_w[static_cast<std::size_t>(j)] = w;
        best_from[static_cast<std::size_t>(j)] = pick;
      }
    }
  }
  std::sort(td.edges.begin(), td.edges.end());
  return td;
}

MinSepSet adhesions(const TreeDecomposition& td) {
  std::vector<VertexSet> out;
  out.reserve(td.edges.size());
  for (const auto& [a, b] : td.edges) {
    out.push_back(VertexSet::intersect(td.bags[static_cast<std::size_t>(a)],
                                       td.bags[static_cast<std::size_t>(b)]));
  }
  return MinSepSet(std::move(out));
}

bool verify_tree_decomposition(const Graph& g, const TreeDecomposition& td,
                               bool require_distinct_bags) {
  int q = static_cast<int>(td.bags.size());
  if (q == 0) return g.vertex_count() == 0;
  if (static_cast<int>(td.edges.size()) != q - 1) return false;

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(q));
  for (const auto& [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= q || b >= q || a == b) return false;
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  // Connected with q-1 edges => a tree.
  {
    std::vector<char> seen(static_cast<std::size_t>(q), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++count;
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    if (count != q) return false;
  }
  // Vertex and edge cover.
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool covered = false;
    for (const auto& b : td.bags) {
      if (b.contains(v)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& b : td.bags) {
      if (b.contains(u) && b.contains(v)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  // Junction-tree property: the nodes holding each vertex form a subtree.
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> holders;
    for (int i = 0; i < q; ++i) {
      if (td.bags[static_cast<std::size_t>(i)].contains(v)) holders.push_back(i);
    }
    if (holders.empty()) return false;
    std::vector<char> in_set(static_cast<std::size_t>(q), 0);
    for (int h : holders) in_set[static_cast<std::size_t>(h)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(q), 0);
    std::vector<int> stack{holders[0]};
    seen[static_cast<std::size_t>(holders[0])] = 1;
    int count = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++count;
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (in_set[static_cast<std::size_t>(y)] &&
            !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    if (count != static_cast<int>(holders.size())) return false;
  }
  if (require_distinct_bags) {
    auto sorted = td.bags;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return false;
    }
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct QueueEntry {
  CostValue cost;
  std::uint64_t seq = 0;
  TriangResult result;
  ConstraintSet region;
};

struct QueueCompare {
  // std::priority_queue is a max-heap; invert for (cost, seq) min order.
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.cost != b.cost) return b.cost < a.cost;
    return b.seq < a.seq;
  }
};

bool satisfies(const Graph& g, const std::vector<VertexSet>& bags,
               const ConstraintSet& cs) {
  for (const auto& s : cs.include) {
    if (!clique_in_saturation(g, bags, s)) return false;
  }
  for (const auto& s : cs.exclude) {
    if (clique_in_saturation(g, bags, s)) return false;
  }
  return true;
}

EnumerationSummary run_ranked(const Instance& inst, const BagCostPtr& k,
                              const ResultSink& sink,
                              const EnumerationLimits& limits,
                              const PartitionObserver& observer) {
  const Graph& g = inst.graph();
  const auto start = Clock::now();
  auto elapsed_ms = [&]() {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
  };
  auto out_of_time = [&]() {
    return limits.time_limit_seconds &&
           elapsed_ms() / 1000.0 > *limits.time_limit_seconds;
  };

  EnumerationSummary summary;
  std::uint64_t calls_since_emission = 0;
  auto solve = [&](const ConstraintSet& cs) {
    ++summary.optimizer_calls;
    ++calls_since_emission;
    if (cs.empty()) return min_triang_opt(inst, *k);
    return min_triang_opt(inst, *wrap_constraints(k, cs));
  };

  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueCompare> queue;
  std::uint64_t seq = 0;

#ifndef NDEBUG
  // The partition scheme never creates the same region twice.
  std::set<std::pair<std::vector<VertexSet>, std::vector<VertexSet>>> regions;
  auto assert_fresh = [&](const ConstraintSet& cs) {
    bool fresh = regions.emplace(cs.include, cs.exclude).second;
    if (!fresh) throw InternalError("duplicate constraint region");
  };
#endif

  auto seed = solve(ConstraintSet{});
  if (seed) {
#ifndef NDEBUG
    assert_fresh(ConstraintSet{});
#endif
    queue.push(QueueEntry{seed->cost, seq++, std::move(*seed), {}});
  }

  double last_emit_ms = 0;
  while (!queue.empty()) {
    if (out_of_time()) return summary;
    QueueEntry top = queue.top();
    queue.pop();

    Emission em;
    em.index = summary.emitted;
    em.result = top.result;
    em.elapsed_ms = elapsed_ms();
    em.delay_ms = em.elapsed_ms - last_emit_ms;
    em.optimizer_calls = calls_since_emission;
    last_emit_ms = em.elapsed_ms;
    if (summary.emitted > 0) {
      summary.max_calls_between_emissions =
          std::max(summary.max_calls_between_emissions, calls_since_emission);
    }
    calls_since_emission = 0;

    ++summary.emitted;
    summary.last_cost = top.result.cost;
    summary.elapsed_ms = em.elapsed_ms;
    // Stopping before the popped region is re-partitioned leaves the rest
    // of that region unenumerated, so an early stop is never "exhausted".
    if (!sink(em)) return summary;
    if (limits.max_results && summary.emitted >= *limits.max_results) {
      summary.elapsed_ms = elapsed_ms();
      return summary;
    }

    // Partition the popped region along MinSep(H) ∖ I: the i-th child keeps
    // S_1..S_{i-1} and forbids S_i.
    MinSepSet h_seps = min_seps_of_triangulation(g, top.result);
    std::vector<VertexSet> fresh;
    for (const auto& s : h_seps) {
      if (std::find(top.region.include.begin(), top.region.include.end(), s) ==
          top.region.include.end()) {
        fresh.push_back(s);
      }
    }

    PartitionTrace trace;
    if (observer) {
      trace.popped = top.result;
      trace.region = top.region;
    }
    ConstraintSet child;
    child.include = top.region.include;
    for (const auto& s : fresh) {
      child.exclude = top.region.exclude;
      child.exclude.push_back(s);
      std::sort(child.exclude.begin(), child.exclude.end());

      auto opt = solve(child);
      bool push = opt && satisfies(g, opt->bags, child);
      if (push) {
#ifndef NDEBUG
        assert_fresh(child);
#endif
        queue.push(QueueEntry{opt->cost, seq++, std::move(*opt), child});
      }
      if (observer) trace.children.emplace_back(child, push);

      child.include.push_back(s);
      std::sort(child.include.begin(), child.include.end());
    }
    if (observer) observer(trace);
    summary.elapsed_ms = elapsed_ms();
  }
  summary.exhausted = true;
  summary.elapsed_ms = elapsed_ms();
  return summary;
}

}  // namespace

EnumerationSummary ranked_triang(const Instance& inst, const BagCostPtr& k,
                                 const ResultSink& sink,
                                 const EnumerationLimits& limits,
                                 const PartitionObserver& observer) {
  return run_ranked(inst, k, sink, limits, observer);
}

EnumerationSummary ranked_triang(const Graph& g, const BagCostPtr& k,
                                 const ResultSink& sink,
                                 const EnumerationLimits& limits,
                                 const PartitionObserver& observer) {
  return run_ranked(Instance::build(g), k, sink, limits, observer);
}

EnumerationSummary ranked_triang_bounded(const Graph& g, const BagCostPtr& k,
                                         int width_bound,
                                         const ResultSink& sink,
                                         const EnumerationLimits& limits,
                                         const PartitionObserver& observer) {
  return run_ranked(Instance::build_bounded(g, width_bound), k, sink, limits,
                    observer);
}

}  // namespace tdecomp
