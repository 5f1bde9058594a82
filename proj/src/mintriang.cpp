#include "tdecomp/mintriang.hpp"

#include <algorithm>

#include "tdecomp/enumerate.hpp"
#include "tdecomp/errors.hpp"

namespace tdecomp {

namespace {

// Components of g[active].
std::vector<VertexSet> components_of_induced(const Graph& g,
                                             const VertexSet& active) {
  return components(g, VertexSet::minus(g.vertices(), active));
}

}  // namespace

Instance Instance::build(const Graph& g, const Budget& sep_budget,
                         const Budget& pmc_budget) {
  MinSepSet seps = enumerate_min_seps(g, sep_budget);
  PmcSet pmcs = enumerate_pmcs(g, seps, pmc_budget);
  return build_impl(g, std::move(seps), std::move(pmcs), std::nullopt);
}

Instance Instance::build(const Graph& g, MinSepSet seps, PmcSet pmcs) {
  return build_impl(g, std::move(seps), std::move(pmcs), std::nullopt);
}

Instance Instance::build_bounded(const Graph& g, int width_bound,
                                 const Budget& sep_budget,
                                 const Budget& pmc_budget) {
  if (width_bound < 0) {
    throw InvalidInputError("width bound must be nonnegative");
  }
  MinSepSet seps = enumerate_min_seps(g, sep_budget);
  PmcSet pmcs = enumerate_pmcs(g, seps, pmc_budget);

  std::vector<VertexSet> small_seps;
  for (const auto& s : seps) {
    if (s.size() <= width_bound) small_seps.push_back(s);
  }
  std::vector<VertexSet> small_omegas;
  for (const auto& info : pmcs) {
    if (info.omega.size() <= width_bound + 1) small_omegas.push_back(info.omega);
  }
  return build_impl(g, MinSepSet(std::move(small_seps)),
                    PmcSet::from_omegas(g, std::move(small_omegas)),
                    width_bound);
}

Instance Instance::build_impl(const Graph& g, MinSepSet seps, PmcSet pmcs,
                              std::optional<int> width_bound) {
  if (g.vertex_count() == 0) {
    throw InvalidInputError("cannot optimize the empty graph");
  }
  if (!is_connected(g)) {
    throw InvalidInputError("graph must be connected");
  }

  Instance inst;
  inst.g_ = g;
  inst.seps_ = std::move(seps);
  inst.pmcs_ = std::move(pmcs);
  inst.width_bound_ = width_bound;

  auto blocks = full_blocks(g, inst.seps_);
  inst.blocks_.reserve(blocks.size());
  std::unordered_map<VertexSet, std::vector<int>, VertexSetHash> by_sep;
  for (auto& b : blocks) {
    int idx = static_cast<int>(inst.blocks_.size());
    inst.index_.emplace(b, idx);
    by_sep[b.s].push_back(idx);
    VertexSet verts = b.vertices();
    inst.blocks_.push_back(IndexedBlock{std::move(b), std::move(verts), {}});
  }

  auto find_block = [&](const VertexSet& s, int inside_vertex) -> int {
    auto it = by_sep.find(s);
    if (it != by_sep.end()) {
      for (int idx : it->second) {
        if (inst.blocks_[static_cast<std::size_t>(idx)].block.c.contains(
                inside_vertex)) {
          return idx;
        }
      }
    }
    return -1;
  };

  for (const auto& info : inst.pmcs_) {
    // Resolve the associated blocks once; reused for the root and for every
    // parent block below.
    std::vector<int> assoc_ids;
    assoc_ids.reserve(info.blocks.size());
    for (const auto& sub : info.blocks) {
      int idx = inst.block_index(sub);
      if (idx < 0) {
        throw InternalError(
            "associated block of a PMC is missing from the block table");
      }
      assoc_ids.push_back(idx);
    }
    inst.root_candidates_.push_back(PmcCandidate{info.omega, assoc_ids});

    // Ω is a candidate of exactly the blocks (S, C) with S associated to Ω
    // and C the S-component containing Ω∖S; its sub-blocks are the
    // associated blocks lying inside C.
    for (const auto& s : info.seps.sets()) {
      VertexSet rest = VertexSet::minus(info.omega, s);
      if (rest.empty()) {
        throw InternalError("associated separator equals its PMC");
      }
      int parent = find_block(s, rest.min());
      if (parent < 0) {
        throw InternalError("no full block hosts a PMC candidate");
      }
      const VertexSet& c =
          inst.blocks_[static_cast<std::size_t>(parent)].block.c;
      std::vector<int> sub_ids;
      for (std::size_t i = 0; i < info.blocks.size(); ++i) {
        if (c.contains(info.blocks[i].c.min())) {
          sub_ids.push_back(assoc_ids[i]);
        }
      }
      inst.blocks_[static_cast<std::size_t>(parent)].candidates.push_back(
          PmcCandidate{info.omega, std::move(sub_ids)});
    }
  }
  return inst;
}

int Instance::block_index(const Block& b) const {
  auto it = index_.find(b);
  return it == index_.end() ? -1 : it->second;
}

const std::optional<BlockEntry>& BlockTable::entry(const Block& b) const {
  int idx = inst_->block_index(b);
  if (idx < 0) throw InternalError("unknown block");
  return entries_[static_cast<std::size_t>(idx)];
}

int TriangResult::width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return w - 1;
}

namespace {

// Collects entry bags plus omega into sorted, deduplicated form.
std::vector<VertexSet> materialize_bags(const BlockTable& table,
                                        const PmcCandidate& cand) {
  std::vector<VertexSet> out;
  for (int sub : cand.sub_blocks) {
    const auto& e = table.entry(sub);
    if (!e) throw InternalError("assemble_bags: missing sub-block entry");
    out.insert(out.end(), e->bags.begin(), e->bags.end());
  }
  out.push_back(cand.omega);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct DpOutcome {
  int candidate = -1;
  CostValue cost;
};

// argmin over the candidate list; first-encountered wins ties. Candidates
// whose sub-blocks have no entry (possible only under a width bound) are
// skipped.
DpOutcome best_candidate(const Instance& inst, const BagCost& k,
                         const std::vector<PmcCandidate>& candidates,
                         const VertexSet& vertices, const BlockTable& table,
                         CostScratch& scratch,
                         std::vector<const VertexSet*>& refs) {
  DpOutcome out;
  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    const auto& cand = candidates[ci];
    refs.clear();
    bool viable = true;
    for (int sub : cand.sub_blocks) {
      const auto& e = table.entry(sub);
      if (!e) {
        if (!inst.width_bound()) {
          throw InternalError("sub-block tabulated out of order");
        }
        viable = false;
        break;
      }
      for (const auto& bag : e->bags) refs.push_back(&bag);
    }
    if (!viable) continue;
    refs.push_back(&cand.omega);
    CostValue c = k.eval_refs(inst.graph(), vertices, refs, scratch);
    if (out.candidate < 0 || c < out.cost) {
      out.candidate = static_cast<int>(ci);
      out.cost = std::move(c);
    }
  }
  return out;
}

}  // namespace

std::vector<VertexSet> assemble_bags(const Instance& inst,
                                     const std::optional<Block>& parent,
                                     const VertexSet& omega,
                                     const BlockTable& table) {
  PmcCandidate cand;
  cand.omega = omega;
  VertexSet scope = parent ? parent->vertices() : inst.graph().vertices();
  for (const auto& d : components_of_induced(inst.graph(),
                                             VertexSet::minus(scope, omega))) {
    Block sub{neighborhood(inst.graph(), d), d};
    int idx = inst.block_index(sub);
    if (idx < 0) throw InternalError("assemble_bags: unknown sub-block");
    cand.sub_blocks.push_back(idx);
  }
  return materialize_bags(table, cand);
}

std::optional<TriangResult> min_triang_opt(const Instance& inst,
                                           const BagCost& k,
                                           BlockTable* table_out) {
  const Graph& g = inst.graph();
  BlockTable table(inst);
  CostScratch scratch;
  scratch.bind(g);
  std::vector<const VertexSet*> refs;

  for (std::size_t bi = 0; bi < inst.blocks().size(); ++bi) {
    const auto& blk = inst.blocks()[bi];
    if (blk.candidates.empty() && !inst.width_bound()) {
      throw InternalError("full block without any PMC candidate");
    }
    DpOutcome best = best_candidate(inst, k, blk.candidates, blk.vertices,
                                    table, scratch, refs);
    if (best.candidate < 0) continue;  // width bound exhausted this block
    const auto& cand = blk.candidates[static_cast<std::size_t>(best.candidate)];
    table.slot(static_cast<int>(bi)) = BlockEntry{
        cand.omega, materialize_bags(table, cand), std::move(best.cost)};
  }

  if (inst.root_candidates().empty() && !inst.width_bound()) {
    throw InternalError("no PMC for a connected nonempty graph");
  }
  VertexSet all = g.vertices();
  DpOutcome best = best_candidate(inst, k, inst.root_candidates(), all, table,
                                  scratch, refs);
  if (best.candidate < 0) return std::nullopt;

  const auto& cand =
      inst.root_candidates()[static_cast<std::size_t>(best.candidate)];
  TriangResult result;
  result.bags = materialize_bags(table, cand);
  result.cost = std::move(best.cost);
  result.chosen_root_pmc = cand.omega;
  result.fill_edges = triangulation_edges(g, result.bags).second;
  if (table_out) *table_out = std::move(table);
  return result;
}

TriangResult min_triang(const Instance& inst, const BagCost& k) {
  if (inst.width_bound()) {
    throw PreconditionError(
        "min_triang on a width-bounded instance; use min_triang_bounded");
  }
  auto r = min_triang_opt(inst, k);
  if (!r) throw InternalError("unbounded optimization returned nothing");
  return std::move(*r);
}

TriangResult min_triang(const Graph& g, const BagCost& k, const MinSepSet& seps,
                        const PmcSet& pmcs) {
  return min_triang(Instance::build(g, seps, pmcs), k);
}

std::optional<TriangResult> min_triang_bounded(const Graph& g,
                                               const BagCost& k,
                                               int width_bound) {
  return min_triang_opt(Instance::build_bounded(g, width_bound), k);
}

std::pair<Graph, std::vector<std::pair<int, int>>> triangulation_edges(
    const Graph& g, const std::vector<VertexSet>& bags) {
  VertexSet covered;
  for (const auto& b : bags) covered = VertexSet::unite(covered, b);
  if (covered != g.vertices()) {
    throw InvalidInputError("triangulation_edges: bags do not cover V(g)");
  }
  for (const auto& [u, v] : g.edges()) {
    bool inside = false;
    for (const auto& b : bags) {
      if (b.contains(u) && b.contains(v)) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      throw InvalidInputError("triangulation_edges: bags do not cover E(g)");
    }
  }

  auto edges = g.edges();
  for (const auto& b : bags) {
    for (int i = 0; i < b.size(); ++i) {
      for (int j = i + 1; j < b.size(); ++j) {
        edges.emplace_back(b[i], b[j]);
      }
    }
  }
  Graph h(g.vertex_count(), edges, g.labels());

  auto ge = g.edges();
  auto he = h.edges();
  std::vector<std::pair<int, int>> fill;
  std::set_difference(he.begin(), he.end(), ge.begin(), ge.end(),
                      std::back_inserter(fill));
  return {std::move(h), std::move(fill)};
}

MinSepSet min_seps_of_triangulation(const Graph& g, const TriangResult& r) {
  return adhesions(build_clique_tree(g, r.bags));
}

}  // namespace tdecomp
