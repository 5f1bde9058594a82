#ifndef TDECOMP_MINTRIANG_HPP
#define TDECOMP_MINTRIANG_HPP

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tdecomp/cost.hpp"
#include "tdecomp/graph.hpp"
#include "tdecomp/pmc.hpp"
#include "tdecomp/separators.hpp"

namespace tdecomp {

// One candidate PMC for a block (or for the root), with its sub-blocks
// resolved to indices into the instance's block list.
struct PmcCandidate {
  VertexSet omega;
  std::vector<int> sub_blocks;
};

struct IndexedBlock {
  Block block;
  VertexSet vertices;  // S ∪ C
  std::vector<PmcCandidate> candidates;
};

// The precomputed search space of the optimizer: MinSep(G), PMC(G), the full
// blocks in ascending-cardinality order, and the candidate tables. Built once
// per graph and shared across every optimizer invocation of an enumeration
// run, which is where almost all of the ranked-enumeration speed comes from.
class Instance {
 public:
  // Computes separators and PMCs internally (budgets optional).
  static Instance build(const Graph& g, const Budget& sep_budget = {},
                        const Budget& pmc_budget = {});
  // Uses precomputed sets; seps must be MinSep(g) and pmcs must be PMC(g).
  static Instance build(const Graph& g, MinSepSet seps, PmcSet pmcs);
  // Width-bounded variant: only separators of size <= b and PMCs of size
  // <= b+1 take part, which restricts the optimum to width <= b.
  static Instance build_bounded(const Graph& g, int width_bound,
                                const Budget& sep_budget = {},
                                const Budget& pmc_budget = {});

  const Graph& graph() const { return g_; }
  const MinSepSet& seps() const { return seps_; }
  const PmcSet& pmcs() const { return pmcs_; }
  const std::vector<IndexedBlock>& blocks() const { return blocks_; }
  const std::vector<PmcCandidate>& root_candidates() const {
    return root_candidates_;
  }
  std::optional<int> width_bound() const { return width_bound_; }

  // Index into blocks(), or -1 when the block is not tabulated.
  int block_index(const Block& b) const;

 private:
  static Instance build_impl(const Graph& g, MinSepSet seps, PmcSet pmcs,
                             std::optional<int> width_bound);

  Graph g_;
  MinSepSet seps_;
  PmcSet pmcs_;
  std::vector<IndexedBlock> blocks_;
  std::vector<PmcCandidate> root_candidates_;
  std::unordered_map<Block, int, BlockHash> index_;
  std::optional<int> width_bound_;
};

// Tabulated optimum for one block: the chosen PMC, the maximal cliques of
// the stored minimal triangulation of the block's realization, and its cost.
struct BlockEntry {
  VertexSet chosen_pmc;
  std::vector<VertexSet> bags;  // sorted
  CostValue cost;
};

// DP table aligned with Instance::blocks(). Entries are absent only in
// width-bounded instances, for blocks with no within-bound triangulation.
class BlockTable {
 public:
  explicit BlockTable(const Instance& inst)
      : inst_(&inst), entries_(inst.blocks().size()) {}

  const std::optional<BlockEntry>& entry(int block_index) const {
    return entries_[static_cast<std::size_t>(block_index)];
  }
  // Throws InternalError when the block is unknown.
  const std::optional<BlockEntry>& entry(const Block& b) const;

  std::optional<BlockEntry>& slot(int block_index) {
    return entries_[static_cast<std::size_t>(block_index)];
  }
  const Instance& instance() const { return *inst_; }

 private:
  const Instance* inst_;
  std::vector<std::optional<BlockEntry>> entries_;
};

// A minimal triangulation, carried canonically as its set of maximal-clique
// bags; fill edges are derived on emission.
struct TriangResult {
  std::vector<VertexSet> bags;  // sorted; MaxClq(H)
  std::vector<std::pair<int, int>> fill_edges;
  CostValue cost;
  VertexSet chosen_root_pmc;

  bool feasible() const { return !cost.is_infinite(); }
  int width() const;
  long long fill_count() const {
    return static_cast<long long>(fill_edges.size());
  }
};

// Union of the tabulated bag sets of omega's sub-blocks plus {omega}.
// `parent` scopes the assembly to one block's realization; absent means the
// root (the whole graph). Missing table entries are an internal error.
std::vector<VertexSet> assemble_bags(const Instance& inst,
                                     const std::optional<Block>& parent,
                                     const VertexSet& omega,
                                     const BlockTable& table);

// The block dynamic program: iterate the full blocks by ascending |S∪C|,
// choose the cost-minimal PMC per block, then choose the root PMC over the
// whole graph. For width-bounded instances the result is absent when no
// triangulation fits the bound; otherwise a result always comes back, with
// an infinite cost marking constraint-infeasibility.
std::optional<TriangResult> min_triang_opt(const Instance& inst,
                                           const BagCost& k,
                                           BlockTable* table_out = nullptr);

// Unbounded convenience forms.
TriangResult min_triang(const Instance& inst, const BagCost& k);
TriangResult min_triang(const Graph& g, const BagCost& k, const MinSepSet& seps,
                        const PmcSet& pmcs);

// Optimal minimal triangulation of width <= width_bound, if one exists.
std::optional<TriangResult> min_triang_bounded(const Graph& g,
                                               const BagCost& k,
                                               int width_bound);

// g with every bag saturated, plus the fill edges (sorted, u < v).
// Bags must cover all vertices and edges of g.
std::pair<Graph, std::vector<std::pair<int, int>>> triangulation_edges(
    const Graph& g, const std::vector<VertexSet>& bags);

// MinSep(H) for the triangulation H carried by r: the adhesions of a clique
// tree of H.
MinSepSet min_seps_of_triangulation(const Graph& g, const TriangResult& r);

}  // namespace tdecomp

#endif  // TDECOMP_MINTRIANG_HPP
