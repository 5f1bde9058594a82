#include "tdecomp/separators.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <unordered_set>

#include "tdecomp/errors.hpp"

namespace tdecomp {

MinSepSet::MinSepSet(std::vector<VertexSet> sets) : sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool MinSepSet::contains(const VertexSet& s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

bool is_min_sep(const Graph& g, const VertexSet& s) {
  int full = 0;
  for (const auto& c : components(g, s)) {
    if (neighborhood(g, c) == s && ++full >= 2) return true;
  }
  return false;
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::vector<int>> to_raw(
    const std::unordered_set<VertexSet, VertexSetHash>& seen) {
  std::vector<std::vector<int>> raw;
  raw.reserve(seen.size());
  for (const auto& s : seen) raw.push_back(s.ids());
  std::sort(raw.begin(), raw.end());
  return raw;
}

}  // namespace

MinSepSet enumerate_min_seps(const Graph& g, const Budget& budget) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::deque<VertexSet> work;
  const auto start = Clock::now();

  auto over_time = [&]() {
    return budget.time_limit_seconds &&
           std::chrono::duration<double>(Clock::now() - start).count() >
               *budget.time_limit_seconds;
  };
  auto fail = [&]() {
    throw BudgetExceededError(BudgetExceededError::Stage::MinimalSeparators,
                              to_raw(seen),
                              "minimal separator enumeration budget exceeded");
  };
  auto admit = [&](VertexSet s) {
    if (s.empty()) return;  // disconnected side effects carry no separator
    if (seen.insert(s).second) {
      if (budget.max_items && seen.size() > *budget.max_items) fail();
      work.push_back(std::move(s));
    }
  };

  for (int v = 0; v < g.vertex_count(); ++v) {
    for (const auto& c : components(g, closed_neighborhood(g, v))) {
      admit(neighborhood(g, c));
    }
    if (over_time()) fail();
  }
  while (!work.empty()) {
    VertexSet s = std::move(work.front());
    work.pop_front();
    for (int x : s) {
      VertexSet removed = VertexSet::unite(s, closed_neighborhood(g, x));
      for (const auto& c : components(g, removed)) {
        admit(neighborhood(g, c));
      }
    }
    if (over_time()) fail();
  }

  std::vector<VertexSet> out(seen.begin(), seen.end());
  return MinSepSet(std::move(out));
}

bool crosses(const Graph& g, const VertexSet& s, const VertexSet& t) {
  int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  for (int v : s) comp[static_cast<std::size_t>(v)] = -2;
  int next = 0;
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    if (comp[static_cast<std::size_t>(v)] != -1) continue;
    int id = next++;
    comp[static_cast<std::size_t>(v)] = id;
    stack.push_back(v);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(x)) {
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
  }
  int first = -1;
  for (int v : t) {
    int c = comp[static_cast<std::size_t>(v)];
    if (c < 0) continue;  // v belongs to s
    if (first == -1) {
      first = c;
    } else if (c != first) {
      return true;
    }
  }
  return false;
}

std::vector<Block> full_blocks(const Graph& g, const MinSepSet& seps) {
  std::vector<Block> out;
  for (const auto& s : seps) {
    for (auto& c : components(g, s)) {
      if (neighborhood(g, c) == s) out.push_back(Block{s, std::move(c)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
    int na = a.s.size() + a.c.size();
    int nb = b.s.size() + b.c.size();
    if (na != nb) return na < nb;
    if (a.s != b.s) return a.s < b.s;
    return a.c < b.c;
  });
  return out;
}

InducedSubgraph realization(const Graph& g, const Block& b) {
  InducedSubgraph sub = induced_subgraph(g, b.vertices());
  std::vector<int> s_local;
  s_local.reserve(static_cast<std::size_t>(b.s.size()));
  for (int i = 0; i < static_cast<int>(sub.original_ids.size()); ++i) {
    if (b.s.contains(sub.original_ids[static_cast<std::size_t>(i)])) {
      s_local.push_back(i);
    }
  }
  sub.graph = saturate(sub.graph, VertexSet(std::move(s_local)));
  return sub;
}

}  // namespace tdecomp
