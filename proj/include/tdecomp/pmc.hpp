#ifndef TDECOMP_PMC_HPP
#define TDECOMP_PMC_HPP

#include <vector>

#include "tdecomp/graph.hpp"
#include "tdecomp/separators.hpp"

namespace tdecomp {

// A potential maximal clique together with its associated minimal separators
// and full blocks (the neighborhoods of its components, and the pairs they
// form). Cached at admission time because the dynamic program reads them
// over and over.
struct PmcInfo {
  VertexSet omega;
  MinSepSet seps;             // MinSep(Ω)
  std::vector<Block> blocks;  // Blck(Ω), canonically ordered
};

// Canonical deduplicated collection of PMCs, sorted by omega.
class PmcSet {
 public:
  PmcSet() = default;

  // Computes the per-PMC caches for each omega.
  static PmcSet from_omegas(const Graph& g, std::vector<VertexSet> omegas);

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const PmcInfo& operator[](int i) const {
    return members_[static_cast<std::size_t>(i)];
  }
  std::vector<PmcInfo>::const_iterator begin() const {
    return members_.begin();
  }
  std::vector<PmcInfo>::const_iterator end() const { return members_.end(); }

  bool contains(const VertexSet& omega) const;
  std::vector<VertexSet> omegas() const;

 private:
  std::vector<PmcInfo> members_;
};

// The polynomial test: omega is a PMC iff no omega-component of g is full
// and every non-adjacent pair of omega is covered by the neighborhood of
// some omega-component.
bool is_pmc(const Graph& g, const VertexSet& omega);

// PMC(G), given seps = MinSep(G). One-vertex-at-a-time lift over prefix
// graphs (per connected component, vertices in ascending-degree order):
// candidates are the previous level's PMCs, those plus the new vertex, and
// sets assembled from the prefix's minimal separators; is_pmc is the
// gatekeeper for every candidate. Throws BudgetExceededError with the
// partial set when a budget trips.
PmcSet enumerate_pmcs(const Graph& g, const MinSepSet& seps,
                      const Budget& budget = {});

// Variant with an explicit per-component vertex insertion order (position ->
// vertex id); the default order is ascending degree. The result is the same
// set regardless of order.
PmcSet enumerate_pmcs_with_order(const Graph& g, const MinSepSet& seps,
                                 const std::vector<int>& order,
                                 const Budget& budget = {});

// {N(C) : C an omega-component}, deduplicated. Requires is_pmc(g, omega).
MinSepSet minseps_of_pmc(const Graph& g, const VertexSet& omega);

// The full blocks (N(C), C) over omega-components, canonically ordered.
std::vector<Block> blocks_of_pmc(const Graph& g, const VertexSet& omega);

// All Ω ∈ pmcs with S ⊊ Ω ⊆ S∪C.
std::vector<VertexSet> pmcs_in_block(const PmcSet& pmcs, const Block& b);

}  // namespace tdecomp

#endif  // TDECOMP_PMC_HPP
