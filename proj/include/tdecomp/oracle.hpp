#ifndef TDECOMP_ORACLE_HPP
#define TDECOMP_ORACLE_HPP

#include <utility>
#include <vector>

#include "tdecomp/graph.hpp"
#include "tdecomp/separators.hpp"

namespace tdecomp::oracle {

// Brute-force reference implementations. Deliberately definitional and slow;
// they exist to pin down ground truth for tests and tiny CLI runs, never for
// the production path. Every function rejects graphs above the size bound.

inline constexpr int kDefaultVertexBound = 10;

// A canonical bag set plus its fill edges; one minimal triangulation.
struct BruteTriangulation {
  std::vector<VertexSet> bags;               // sorted
  std::vector<std::pair<int, int>> fill;     // u < v, sorted
};

// Quantifies the definition directly: S is a minimal (u,v)-separator for some
// pair u,v iff removing S disconnects u from v and removing any S∖{x} does
// not.
MinSepSet brute_min_seps(const Graph& g, int vertex_bound = kDefaultVertexBound);

// All minimal triangulations: saturate every maximal set of pairwise-parallel
// minimal separators. Maximal independent sets of the crossing relation are
// enumerated recursively.
std::vector<BruteTriangulation> brute_min_triangs(
    const Graph& g, int vertex_bound = kDefaultVertexBound);

// Membership of omega in the maximal cliques of some minimal triangulation.
bool brute_is_pmc(const Graph& g, const VertexSet& omega,
                  int vertex_bound = kDefaultVertexBound);

// True iff h equals (by edge set) one of the minimal triangulations of g.
bool verify_min_triang(const Graph& g, const Graph& h,
                       int vertex_bound = kDefaultVertexBound);

}  // namespace tdecomp::oracle

#endif  // TDECOMP_ORACLE_HPP
