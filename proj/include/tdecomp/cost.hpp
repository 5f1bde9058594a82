#ifndef TDECOMP_COST_HPP
#define TDECOMP_COST_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tdecomp/graph.hpp"

namespace tdecomp {

// A totally ordered cost with a distinguished top element ∞. Finite values
// are short tuples compared lexicographically, which is how the lexicographic
// width-then-fill cost avoids the overflowing |E|^width encoding.
class CostValue {
 public:
  CostValue() : infinite_(false) {}
  explicit CostValue(double v) : infinite_(false), parts_{v} {}
  explicit CostValue(std::vector<double> parts)
      : infinite_(false), parts_(std::move(parts)) {}
  static CostValue infinite() {
    CostValue c;
    c.infinite_ = true;
    return c;
  }

  bool is_infinite() const { return infinite_; }
  const std::vector<double>& parts() const { return parts_; }

  friend bool operator==(const CostValue& a, const CostValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const CostValue& a, const CostValue& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.parts_ < b.parts_;
  }
  friend bool operator<=(const CostValue& a, const CostValue& b) {
    return a < b || a == b;
  }
  friend bool operator>(const CostValue& a, const CostValue& b) {
    return b < a;
  }
  friend bool operator!=(const CostValue& a, const CostValue& b) {
    return !(a == b);
  }

  std::string to_string() const;  // "inf", "3", "(2,1)"

 private:
  bool infinite_;
  std::vector<double> parts_;
};

// Reusable bitset workspace for bag-cost evaluation. One instance per
// optimizer call amortizes the adjacency-bitmatrix build and the row storage
// across tens of thousands of evaluations. Not thread-safe; use one per
// thread.
class CostScratch {
 public:
  // (Re)binds the scratch to a graph, building its adjacency bitsets.
  void bind(const Graph& g);

  // Starts one evaluation over `vertices`, clearing previously touched rows.
  void begin(const VertexSet& vertices);
  // Accumulates a bag: row(v) |= bag for every v in the bag.
  void add_bag(const VertexSet& bag);

  int words() const { return words_; }
  const std::uint64_t* row(int v) const {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }
  const std::uint64_t* adjacency_row(int v) const {
    return gbits_.data() + static_cast<std::size_t>(v) * words_;
  }
  const std::uint64_t* vertices_mask() const { return vmask_.data(); }

  // Builds an auxiliary mask for an arbitrary set (valid until the next call).
  const std::uint64_t* make_mask(const VertexSet& s);

 private:
  const Graph* g_ = nullptr;
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> gbits_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> vmask_;
  std::vector<std::uint64_t> bagmask_;
  std::vector<std::uint64_t> auxmask_;
  std::vector<int> touched_;
};

// A cost over the bag set of a tree decomposition. Implementations must be
// invariant under bag duplication and order (the value depends only on the
// set of bags) and split monotone: replacing the decomposition induced on one
// side of a tree split by a no-costlier one never increases the total cost.
class BagCost {
 public:
  virtual ~BagCost() = default;

  // `vertices` is the vertex set of the subproblem (the union of the bags);
  // the graph under evaluation is g[vertices]. Bags point into caller-owned
  // storage and must each be a subset of `vertices`.
  virtual CostValue eval_refs(const Graph& g, const VertexSet& vertices,
                              std::span<const VertexSet* const> bags,
                              CostScratch& scratch) const = 0;

  virtual std::string name() const = 0;

  // Validating wrapper: rejects an empty bag list and bags whose union is
  // not exactly `vertices`.
  CostValue eval(const Graph& g, const VertexSet& vertices,
                 const std::vector<VertexSet>& bags) const;
};

using BagCostPtr = std::shared_ptr<const BagCost>;

// max |bag| − 1.
BagCostPtr width_cost();
// |E(saturate-all-bags)| − |E(g[vertices])|.
BagCostPtr fill_cost();
// The pair (width, fill) compared lexicographically.
BagCostPtr lex_width_fill_cost();

// max over bags of the sum of member vertex weights. Weights are indexed by
// ambient-graph vertex id and must be nonnegative; a bag vertex without a
// weight is an error.
BagCostPtr weighted_width_cost(std::vector<double> vertex_weights);

struct EdgeWeights {
  std::unordered_map<std::uint64_t, double> weights;
  std::optional<double> fallback;

  static std::uint64_t key(int u, int v);
  void set(int u, int v, double w);
  // Throws InvalidInputError when the edge has no weight and no fallback.
  double at(int u, int v) const;
};

// Sum of weights of the fill edges.
BagCostPtr weighted_fill_cost(EdgeWeights weights);

// Inclusion/exclusion constraints, each a vertex set that must (include) or
// must not (exclude) end up a clique once every bag is saturated.
struct ConstraintSet {
  std::vector<VertexSet> include;
  std::vector<VertexSet> exclude;

  bool empty() const { return include.empty() && exclude.empty(); }
};

// True iff every pair of s is an edge of g or jointly inside some bag.
bool clique_in_saturation(const Graph& g, const std::vector<VertexSet>& bags,
                          const VertexSet& s);

// κ[I,X]: evaluates to base unless some constraint with s ⊆ vertices is
// violated, in which case ∞. A set in both include and exclude makes every
// evaluation that scopes it ∞. Preserves split monotonicity.
BagCostPtr wrap_constraints(BagCostPtr base, ConstraintSet constraints);

}  // namespace tdecomp

#endif  // TDECOMP_COST_HPP
