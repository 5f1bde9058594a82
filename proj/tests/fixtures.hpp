#ifndef TDECOMP_TESTS_FIXTURES_HPP
#define TDECOMP_TESTS_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "tdecomp/graph.hpp"

namespace tdecomp::testing {

// The running-example graph: a 4-cycle u—w1—v—w2—u thickened by w3, plus a
// pendant v'. Vertex ids: u=0, v=1, w1=2, w2=3, w3=4, v'=5.
inline constexpr int kU = 0;
inline constexpr int kV = 1;
inline constexpr int kW1 = 2;
inline constexpr int kW2 = 3;
inline constexpr int kW3 = 4;
inline constexpr int kVp = 5;

inline Graph paper_graph() {
  return Graph(6, {{kU, kW1},
                   {kU, kW2},
                   {kU, kW3},
                   {kV, kW1},
                   {kV, kW2},
                   {kV, kW3},
                   {kV, kVp}},
               {"u", "v", "w1", "w2", "w3", "v'"});
}

inline VertexSet sep1() { return VertexSet{kW1, kW2, kW3}; }
inline VertexSet sep2() { return VertexSet{kU, kV}; }
inline VertexSet sep3() { return VertexSet{kV}; }

// Bags of the two proper tree decompositions of the running example.
inline std::vector<VertexSet> bags_t1() {
  return {VertexSet{kU, kW1, kW2, kW3}, VertexSet{kV, kW1, kW2, kW3},
          VertexSet{kV, kVp}};
}
inline std::vector<VertexSet> bags_t2() {
  return {VertexSet{kU, kV, kW1}, VertexSet{kU, kV, kW2},
          VertexSet{kU, kV, kW3}, VertexSet{kV, kVp}};
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

inline Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph gnp(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  while (true) {
    Graph g = gnp(n, p, rng);
    if (is_connected(g)) return g;
  }
}

// Every graph on n vertices, as edge masks. Only sensible for n <= 6.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (mask & (1u << b)) edges.push_back(slots[b]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

// Random connected chordal graph: fill a random connected base graph along a
// random elimination ordering.
inline Graph random_chordal(int n, double p, std::mt19937_64& rng) {
  Graph base = random_connected(n, p, rng);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::vector<char>> adj(
      static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const auto& [u, v] : base.edges()) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (int v : order) {
    std::vector<int> nbrs;
    for (int w = 0; w < n; ++w) {
      if (alive[static_cast<std::size_t>(w)] &&
          adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) {
        nbrs.push_back(w);
      }
    }
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        adj[static_cast<std::size_t>(nbrs[i])][static_cast<std::size_t>(nbrs[j])] = 1;
        adj[static_cast<std::size_t>(nbrs[j])][static_cast<std::size_t>(nbrs[i])] = 1;
      }
    }
    alive[static_cast<std::size_t>(v)] = 0;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

// Definitional chordality: no induced cycle of length >= 4. Exponential.
inline bool brute_is_chordal(const Graph& g) {
  int n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> ids;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) ids.push_back(v);
    }
    if (ids.size() < 4) continue;
    // Induced cycle: every chosen vertex has exactly two chosen neighbors and
    // the chosen set is connected.
    bool cyclic = true;
    for (int v : ids) {
      int deg = 0;
      for (int w : ids) {
        if (w != v && g.adjacent(v, w)) ++deg;
      }
      if (deg != 2) {
        cyclic = false;
        break;
      }
    }
    if (!cyclic) continue;
    if (components(g, VertexSet::minus(g.vertices(), VertexSet(ids))).size() ==
        1) {
      return false;
    }
  }
  return true;
}

}  // namespace tdecomp::testing

#endif  // TDECOMP_TESTS_FIXTURES_HPP
