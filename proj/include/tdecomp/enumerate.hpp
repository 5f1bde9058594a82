#ifndef TDECOMP_ENUMERATE_HPP
#define TDECOMP_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tdecomp/cost.hpp"
#include "tdecomp/mintriang.hpp"

namespace tdecomp {

// Tree of bags; edges index into `bags`.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;
};

// A clique tree of the chordal graph whose maximal cliques are `bags`:
// the maximum-weight spanning tree of the bag graph under intersection-size
// weights. For bags of a minimal triangulation of a connected g this is a
// proper tree decomposition of g.
TreeDecomposition build_clique_tree(const Graph& g,
                                    const std::vector<VertexSet>& bags);

// The set of pairwise intersections over tree edges.
MinSepSet adhesions(const TreeDecomposition& td);

// Vertex cover, edge cover, junction-tree property, tree shape; optionally
// also bag distinctness (the proper/clique-tree requirement).
bool verify_tree_decomposition(const Graph& g, const TreeDecomposition& td,
                               bool require_distinct_bags = false);

struct EnumerationLimits {
  std::optional<std::uint64_t> max_results;
  std::optional<double> time_limit_seconds;
};

struct Emission {
  std::uint64_t index = 0;
  TriangResult result;
  double elapsed_ms = 0;  // since enumeration start (after initialization)
  double delay_ms = 0;    // since the previous emission
  // Constrained-optimizer calls since the previous emission (1 for the first
  // emission: the unconstrained seed call).
  std::uint64_t optimizer_calls = 0;
};

// Return false to stop the enumeration early.
using ResultSink = std::function<bool(const Emission&)>;

// Per-pop partition trace, for white-box tests: the region that was popped
// and each child region with whether its optimum satisfied it (was queued).
struct PartitionTrace {
  TriangResult popped;
  ConstraintSet region;
  std::vector<std::pair<ConstraintSet, bool>> children;
};
using PartitionObserver = std::function<void(const PartitionTrace&)>;

struct EnumerationSummary {
  std::uint64_t emitted = 0;
  bool exhausted = false;  // the queue ran dry: the stream is complete
  double elapsed_ms = 0;
  std::optional<CostValue> last_cost;
  std::uint64_t optimizer_calls = 0;
  // max over consecutive emission pairs; the delay-structure figure.
  std::uint64_t max_calls_between_emissions = 0;
};

// Ranked enumeration of all minimal triangulations of g by non-decreasing k:
// a best-first queue over constraint regions [I,X], each popped region
// re-partitioned along the minimal separators of its emitted optimum.
EnumerationSummary ranked_triang(const Instance& inst, const BagCostPtr& k,
                                 const ResultSink& sink,
                                 const EnumerationLimits& limits = {},
                                 const PartitionObserver& observer = {});
EnumerationSummary ranked_triang(const Graph& g, const BagCostPtr& k,
                                 const ResultSink& sink,
                                 const EnumerationLimits& limits = {},
                                 const PartitionObserver& observer = {});

// Same stream restricted to triangulations of width <= width_bound.
EnumerationSummary ranked_triang_bounded(const Graph& g, const BagCostPtr& k,
                                         int width_bound,
                                         const ResultSink& sink,
                                         const EnumerationLimits& limits = {},
                                         const PartitionObserver& observer = {});

}  // namespace tdecomp

#endif  // TDECOMP_ENUMERATE_HPP
