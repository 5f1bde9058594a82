#include "tdecomp/oracle.hpp"

#include <algorithm>
#include <functional>

#include "tdecomp/errors.hpp"

namespace tdecomp::oracle {

namespace {

void check_bound(const Graph& g, int vertex_bound, const char* op) {
  if (g.vertex_count() > vertex_bound) {
    throw InvalidInputError(std::string(op) + ": graph exceeds oracle size bound (" +
                            std::to_string(g.vertex_count()) + " > " +
                            std::to_string(vertex_bound) + " vertices)");
  }
}

// Reachability of v from u when the `removed` mask is taken out.
bool connected_avoiding(const Graph& g, int u, int v,
                        const std::vector<char>& removed) {
  if (removed[static_cast<std::size_t>(u)] ||
      removed[static_cast<std::size_t>(v)]) {
    return false;
  }
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> stack{u};
  seen[static_cast<std::size_t>(u)] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == v) return true;
    for (int w : g.neighbors(x)) {
      if (!seen[static_cast<std::size_t>(w)] &&
          !removed[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

bool separates(const Graph& g, const VertexSet& s, int u, int v) {
  std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int x : s) removed[static_cast<std::size_t>(x)] = 1;
  return !connected_avoiding(g, u, v, removed);
}

// s crosses t iff s separates two vertices of t.
bool brute_crosses(const Graph& g, const VertexSet& s, const VertexSet& t) {
  for (int i = 0; i < t.size(); ++i) {
    for (int j = i + 1; j < t.size(); ++j) {
      if (s.contains(t[i]) || s.contains(t[j])) continue;
      if (separates(g, s, t[i], t[j])) return true;
    }
  }
  return false;
}

// All maximal independent sets of the crossing graph over `seps`, by
// include/exclude recursion with a maximality check against excluded items.
void maximal_parallel_families(const std::vector<VertexSet>& seps,
                               const std::vector<std::vector<char>>& cross,
                               std::vector<std::vector<int>>* out) {
  int m = static_cast<int>(seps.size());
  std::vector<int> chosen, excluded;
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      // Maximal iff every excluded separator crosses a chosen one.
      for (int e : excluded) {
        bool blocked = false;
        for (int c : chosen) {
          if (cross[static_cast<std::size_t>(e)][static_cast<std::size_t>(c)]) {
            blocked = true;
            break;
          }
        }
        if (!blocked) return;
      }
      out->push_back(chosen);
      return;
    }
    bool compatible = true;
    for (int c : chosen) {
      if (cross[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) {
        compatible = false;
        break;
      }
    }
    if (compatible) {
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
    excluded.push_back(i);
    rec(i + 1);
    excluded.pop_back();
  };
  rec(0);
}

// Bron–Kerbosch over candidate ids; cliques reported through `emit`.
void max_cliques_rec(const Graph& g, std::vector<int>& r, std::vector<int> p,
                     std::vector<int> x,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if (p.empty() && x.empty()) {
    emit(r);
    return;
  }
  while (!p.empty()) {
    int v = p.back();
    std::vector<int> np, nx;
    for (int w : p) {
      if (g.adjacent(v, w)) np.push_back(w);
    }
    for (int w : x) {
      if (g.adjacent(v, w)) nx.push_back(w);
    }
    r.push_back(v);
    max_cliques_rec(g, r, std::move(np), std::move(nx), emit);
    r.pop_back();
    p.pop_back();
    x.push_back(v);
  }
}

std::vector<VertexSet> brute_max_cliques(const Graph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    all[static_cast<std::size_t>(v)] = v;
  }
  std::vector<VertexSet> out;
  std::vector<int> r;
  max_cliques_rec(g, r, all, {}, [&](const std::vector<int>& clique) {
    out.emplace_back(clique);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MinSepSet brute_min_seps(const Graph& g, int vertex_bound) {
  check_bound(g, vertex_bound, "brute_min_seps");
  int n = g.vertex_count();
  std::vector<VertexSet> found;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> ids;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) ids.push_back(v);
    }
    VertexSet s(std::move(ids));
    bool minimal_for_some_pair = false;
    for (int u = 0; u < n && !minimal_for_some_pair; ++u) {
      if (s.contains(u)) continue;
      for (int v = u + 1; v < n && !minimal_for_some_pair; ++v) {
        if (s.contains(v)) continue;
        if (!separates(g, s, u, v)) continue;
        bool proper_subset_separates = false;
        for (int x : s) {
          if (separates(g, s.without(x), u, v)) {
            proper_subset_separates = true;
            break;
          }
        }
        if (!proper_subset_separates) minimal_for_some_pair = true;
      }
    }
    if (minimal_for_some_pair) found.push_back(std::move(s));
  }
  return MinSepSet(std::move(found));
}

std::vector<BruteTriangulation> brute_min_triangs(const Graph& g,
                                                  int vertex_bound) {
  check_bound(g, vertex_bound, "brute_min_triangs");
  MinSepSet seps = brute_min_seps(g, vertex_bound);
  int m = seps.size();
  std::vector<std::vector<char>> cross(
      static_cast<std::size_t>(m),
      std::vector<char>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      char c = brute_crosses(g, seps[i], seps[j]) ? 1 : 0;
      cross[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
      cross[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c;
    }
  }
  std::vector<std::vector<int>> families;
  maximal_parallel_families(seps.sets(), cross, &families);

  std::vector<BruteTriangulation> out;
  out.reserve(families.size());
  for (const auto& family : families) {
    Graph h = g;
    for (int idx : family) h = saturate(h, seps[idx]);
    BruteTriangulation t;
    t.bags = brute_max_cliques(h);
    auto ge = g.edges();
    for (const auto& e : h.edges()) {
      if (!std::binary_search(ge.begin(), ge.end(), e)) t.fill.push_back(e);
    }
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(),
            [](const BruteTriangulation& a, const BruteTriangulation& b) {
              return a.bags < b.bags;
            });
  return out;
}

bool brute_is_pmc(const Graph& g, const VertexSet& omega, int vertex_bound) {
  check_bound(g, vertex_bound, "brute_is_pmc");
  for (const auto& t : brute_min_triangs(g, vertex_bound)) {
    if (std::binary_search(t.bags.begin(), t.bags.end(), omega)) return true;
  }
  return false;
}

bool verify_min_triang(const Graph& g, const Graph& h, int vertex_bound) {
  check_bound(g, vertex_bound, "verify_min_triang");
  if (h.vertex_count() != g.vertex_count()) return false;
  auto he = h.edges();
  for (const auto& t : brute_min_triangs(g, vertex_bound)) {
    Graph cand = g;
    for (const auto& [u, v] : t.fill) {
      cand = saturate(cand, VertexSet{u, v});
    }
    if (cand.edges() == he) return true;
  }
  return false;
}

}  // namespace tdecomp::oracle
