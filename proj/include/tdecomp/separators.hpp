#ifndef TDECOMP_SEPARATORS_HPP
#define TDECOMP_SEPARATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdecomp/graph.hpp"

namespace tdecomp {

// A minimal separator S together with one connected component C of G∖S.
// The pair is the key subproblem unit of the block dynamic program.
struct Block {
  VertexSet s;
  VertexSet c;

  VertexSet vertices() const { return VertexSet::unite(s, c); }

  friend bool operator==(const Block& a, const Block& b) {
    return a.s == b.s && a.c == b.c;
  }
  friend bool operator<(const Block& a, const Block& b) {
    if (a.s != b.s) return a.s < b.s;
    return a.c < b.c;
  }
};

struct BlockHash {
  std::size_t operator()(const Block& b) const {
    VertexSetHash h;
    return h(b.s) * 1000003u + h(b.c);
  }
};

// Canonical deduplicated collection of vertex sets, sorted in VertexSet
// order. Used for MinSep(G) and for constraint sets.
class MinSepSet {
 public:
  MinSepSet() = default;
  explicit MinSepSet(std::vector<VertexSet> sets);

  int size() const { return static_cast<int>(sets_.size()); }
  bool empty() const { return sets_.empty(); }
  const VertexSet& operator[](int i) const {
    return sets_[static_cast<std::size_t>(i)];
  }
  std::vector<VertexSet>::const_iterator begin() const {
    return sets_.begin();
  }
  std::vector<VertexSet>::const_iterator end() const { return sets_.end(); }
  const std::vector<VertexSet>& sets() const { return sets_; }

  bool contains(const VertexSet& s) const;

  friend bool operator==(const MinSepSet& a, const MinSepSet& b) {
    return a.sets_ == b.sets_;
  }

 private:
  std::vector<VertexSet> sets_;
};

// Item-count / wall-time limits for the enumeration steps. Both default off.
struct Budget {
  std::optional<std::uint64_t> max_items;
  std::optional<double> time_limit_seconds;

  bool active() const {
    return max_items.has_value() || time_limit_seconds.has_value();
  }
};

// The standard two-full-components characterization: S is a minimal
// separator iff at least two components of G∖S have all of S in their
// neighborhood.
bool is_min_sep(const Graph& g, const VertexSet& s);

// MinSep(G) by neighborhood seeding and expansion closure: seed with the
// separators close to each vertex (neighborhoods of the components of
// G∖N[v]), then repeatedly add the neighborhoods of the components of
// G∖(S ∪ N(x)) for enumerated S and x ∈ S, until a fixpoint.
// Disconnected inputs yield the union of the per-component separator sets
// (the empty separator is never reported).
// Throws BudgetExceededError carrying the partial set when a budget trips.
MinSepSet enumerate_min_seps(const Graph& g, const Budget& budget = {});

// True iff s separates two vertices of t, i.e. t∖s meets at least two
// components of G∖s. Symmetric for minimal separators.
bool crosses(const Graph& g, const VertexSet& s, const VertexSet& t);

// All full blocks (S,C) over seps = MinSep(g), sorted by |S∪C| ascending,
// ties broken by the canonical order of S then C. The ascending-cardinality
// order is what lets the dynamic program tabulate sub-blocks first.
std::vector<Block> full_blocks(const Graph& g, const MinSepSet& seps);

// R(S,C) = G[S∪C] ∪ K_S, with the id map back to g.
InducedSubgraph realization(const Graph& g, const Block& b);

}  // namespace tdecomp

#endif  // TDECOMP_SEPARATORS_HPP
