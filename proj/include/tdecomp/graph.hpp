#ifndef TDECOMP_GRAPH_HPP
#define TDECOMP_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace tdecomp {

// A canonical set of vertex ids: sorted, duplicate-free. Equality is
// extensional and the representation is unique, so a VertexSet can be used
// directly as a map key. All mutating-style operations return new sets.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> ids);
  // Canonicalizes (sorts, dedups) the given ids.
  explicit VertexSet(std::vector<int> ids);

  static VertexSet range(int n);  // {0, 1, ..., n-1}

  bool empty() const { return ids_.empty(); }
  int size() const { return static_cast<int>(ids_.size()); }
  int operator[](int i) const { return ids_[static_cast<std::size_t>(i)]; }
  int min() const { return ids_.front(); }

  std::vector<int>::const_iterator begin() const { return ids_.begin(); }
  std::vector<int>::const_iterator end() const { return ids_.end(); }
  const std::vector<int>& ids() const { return ids_; }

  bool contains(int v) const;
  bool is_subset_of(const VertexSet& other) const;
  bool is_strict_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet with(int v) const;     // this ∪ {v}
  VertexSet without(int v) const;  // this ∖ {v}

  static VertexSet unite(const VertexSet& a, const VertexSet& b);
  static VertexSet minus(const VertexSet& a, const VertexSet& b);
  static VertexSet intersect(const VertexSet& a, const VertexSet& b);

  // Canonical total order: lexicographic on the sorted id sequence.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    return a.ids_ < b.ids_;
  }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.ids_ == b.ids_;
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) {
    return a.ids_ != b.ids_;
  }

  std::string to_string() const;  // "{0,3,5}"

 private:
  std::vector<int> ids_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : s) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Immutable simple undirected graph over dense vertex ids 0..n-1.
// Neighbor lists are kept sorted. Optional per-vertex labels preserve the
// names used by an input file.
class Graph {
 public:
  Graph() = default;
  // Validates ids and rejects self-loops; parallel edge entries collapse.
  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;

  VertexSet vertices() const { return VertexSet::range(n_); }
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  bool has_labels() const { return !labels_.empty(); }
  // The external name of v; falls back to the numeric id.
  std::string label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
};

// An induced subgraph together with the id map back to the parent graph:
// original_ids[new_id] == old_id. New ids follow the sorted order of the
// selected vertex set.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_ids;
};

// G[U] with densely re-indexed vertices.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u);

// G ∪ K_U: every pair inside u becomes an edge. Idempotent.
Graph saturate(const Graph& g, const VertexSet& u);

// Connected components of G∖U, ordered by their minimum vertex id.
std::vector<VertexSet> components(const Graph& g, const VertexSet& u);

// All vertices outside c with a neighbor inside c.
VertexSet neighborhood(const Graph& g, const VertexSet& c);

VertexSet closed_neighborhood(const Graph& g, int v);  // N[v]

bool is_connected(const Graph& g);

// Maximum-cardinality search + perfect-elimination-order verification.
bool is_chordal(const Graph& g);

// MaxClq(g) of a chordal graph, via a perfect elimination ordering.
// Throws PreconditionError when g is not chordal.
std::vector<VertexSet> maximal_cliques_chordal(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& u);

}  // namespace tdecomp

#endif  // TDECOMP_GRAPH_HPP
