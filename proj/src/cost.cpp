#include "tdecomp/cost.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "tdecomp/errors.hpp"

namespace tdecomp {

std::string CostValue::to_string() const {
  if (infinite_) return "inf";
  auto render = [](double v) {
    std::ostringstream os;
    if (v == std::floor(v) && std::abs(v) < 1e15) {
      os << static_cast<long long>(v);
    } else {
      os << v;
    }
    return os.str();
  };
  if (parts_.size() == 1) return render(parts_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += render(parts_[i]);
  }
  return out + ")";
}

void CostScratch::bind(const Graph& g) {
  if (g_ == &g && n_ == g.vertex_count()) return;
  g_ = &g;
  n_ = g.vertex_count();
  words_ = (n_ + 63) / 64;
  gbits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (int v = 0; v < n_; ++v) {
    auto* row = gbits_.data() + static_cast<std::size_t>(v) * words_;
    for (int w : g.neighbors(v)) {
      row[w >> 6] |= 1ull << (w & 63);
    }
  }
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  vmask_.assign(static_cast<std::size_t>(words_), 0);
  bagmask_.assign(static_cast<std::size_t>(words_), 0);
  auxmask_.assign(static_cast<std::size_t>(words_), 0);
  touched_.clear();
}

void CostScratch::begin(const VertexSet& vertices) {
  for (int v : touched_) {
    std::fill_n(rows_.begin() + static_cast<std::size_t>(v) * words_, words_,
                0ull);
  }
  std::fill(vmask_.begin(), vmask_.end(), 0ull);
  touched_.assign(vertices.begin(), vertices.end());
  for (int v : vertices) {
    vmask_[static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63);
  }
}

void CostScratch::add_bag(const VertexSet& bag) {
  std::fill(bagmask_.begin(), bagmask_.end(), 0ull);
  for (int v : bag) {
    bagmask_[static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63);
  }
  for (int v : bag) {
    auto* row = rows_.data() + static_cast<std::size_t>(v) * words_;
    for (int w = 0; w < words_; ++w) row[w] |= bagmask_[static_cast<std::size_t>(w)];
  }
}

const std::uint64_t* CostScratch::make_mask(const VertexSet& s) {
  std::fill(auxmask_.begin(), auxmask_.end(), 0ull);
  for (int v : s) {
    auxmask_[static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63);
  }
  return auxmask_.data();
}

CostValue BagCost::eval(const Graph& g, const VertexSet& vertices,
                        const std::vector<VertexSet>& bags) const {
  if (bags.empty()) {
    throw InvalidInputError(name() + ": empty bag list");
  }
  VertexSet covered;
  for (const auto& b : bags) {
    if (!b.empty() && (b.min() < 0 || b[b.size() - 1] >= g.vertex_count())) {
      throw InvalidInputError(name() + ": bag vertex out of range");
    }
    covered = VertexSet::unite(covered, b);
  }
  if (covered != vertices) {
    throw InvalidInputError(name() +
                            ": bag union does not match the subproblem "
                            "vertex set");
  }
  std::vector<const VertexSet*> refs;
  refs.reserve(bags.size());
  for (const auto& b : bags) refs.push_back(&b);
  CostScratch scratch;
  return eval_refs(g, vertices, refs, scratch);
}

namespace {

int width_of(std::span<const VertexSet* const> bags) {
  int w = 0;
  for (const auto* b : bags) w = std::max(w, b->size());
  return w - 1;
}

// Number of bag-induced non-edges of g[vertices], counted once each.
long long fill_of(const Graph& g, const VertexSet& vertices,
                  std::span<const VertexSet* const> bags,
                  CostScratch& scratch) {
  scratch.bind(g);
  scratch.begin(vertices);
  for (const auto* b : bags) scratch.add_bag(*b);
  const int words = scratch.words();
  const auto* vmask = scratch.vertices_mask();
  long long twice = 0;
  for (int v : vertices) {
    const auto* row = scratch.row(v);
    const auto* grow = scratch.adjacency_row(v);
    for (int w = 0; w < words; ++w) {
      twice += std::popcount(row[w] & ~grow[w] & vmask[w]);
    }
    if (row[v >> 6] & (1ull << (v & 63))) --twice;  // drop the self bit
  }
  return twice / 2;
}

class WidthCost final : public BagCost {
 public:
  CostValue eval_refs(const Graph&, const VertexSet&,
                      std::span<const VertexSet* const> bags,
                      CostScratch&) const override {
    return CostValue(static_cast<double>(width_of(bags)));
  }
  std::string name() const override { return "width"; }
};

class FillCost final : public BagCost {
 public:
  CostValue eval_refs(const Graph& g, const VertexSet& vertices,
                      std::span<const VertexSet* const> bags,
                      CostScratch& scratch) const override {
    return CostValue(static_cast<double>(fill_of(g, vertices, bags, scratch)));
  }
  std::string name() const override { return "fill"; }
};

class LexWidthFillCost final : public BagCost {
 public:
  CostValue eval_refs(const Graph& g, const VertexSet& vertices,
                      std::span<const VertexSet* const> bags,
                      CostScratch& scratch) const override {
    return CostValue({static_cast<double>(width_of(bags)),
                      static_cast<double>(fill_of(g, vertices, bags, scratch))});
  }
  std::string name() const override { return "lexwf"; }
};

class WeightedWidthCost final : public BagCost {
 public:
  explicit WeightedWidthCost(std::vector<double> weights)
      : weights_(std::move(weights)) {
    for (double w : weights_) {
      if (w < 0 || !std::isfinite(w)) {
        throw InvalidInputError("wwidth: weights must be nonnegative finite");
      }
    }
  }
  CostValue eval_refs(const Graph&, const VertexSet&,
                      std::span<const VertexSet* const> bags,
                      CostScratch&) const override {
    double best = 0;
    for (const auto* b : bags) {
      double sum = 0;
      for (int v : *b) {
        if (v >= static_cast<int>(weights_.size())) {
          throw InvalidInputError("wwidth: missing weight for vertex " +
                                  std::to_string(v));
        }
        sum += weights_[static_cast<std::size_t>(v)];
      }
      best = std::max(best, sum);
    }
    return CostValue(best);
  }
  std::string name() const override { return "wwidth"; }

 private:
  std::vector<double> weights_;
};

class WeightedFillCost final : public BagCost {
 public:
  explicit WeightedFillCost(EdgeWeights weights)
      : weights_(std::move(weights)) {}
  CostValue eval_refs(const Graph& g, const VertexSet& vertices,
                      std::span<const VertexSet* const> bags,
                      CostScratch& scratch) const override {
    scratch.bind(g);
    scratch.begin(vertices);
    for (const auto* b : bags) scratch.add_bag(*b);
    double total = 0;
    for (int v : vertices) {
      const auto* row = scratch.row(v);
      const auto* grow = scratch.adjacency_row(v);
      const auto* vmask = scratch.vertices_mask();
      for (int w = 0; w < scratch.words(); ++w) {
        std::uint64_t bits = row[w] & ~grow[w] & vmask[w];
        while (bits) {
          int u = (w << 6) + std::countr_zero(bits);
          bits &= bits - 1;
          if (u > v) total += weights_.at(v, u);
        }
      }
    }
    return CostValue(total);
  }
  std::string name() const override { return "wfill"; }

 private:
  EdgeWeights weights_;
};

class ConstrainedCost final : public BagCost {
 public:
  ConstrainedCost(BagCostPtr base, ConstraintSet cs)
      : base_(std::move(base)), cs_(std::move(cs)) {}

  CostValue eval_refs(const Graph& g, const VertexSet& vertices,
                      std::span<const VertexSet* const> bags,
                      CostScratch& scratch) const override {
    if (!cs_.empty()) {
      scratch.bind(g);
      scratch.begin(vertices);
      for (const auto* b : bags) scratch.add_bag(*b);
      for (const auto& s : cs_.include) {
        if (s.is_subset_of(vertices) && !saturated_clique(s, scratch)) {
          return CostValue::infinite();
        }
      }
      for (const auto& s : cs_.exclude) {
        if (s.is_subset_of(vertices) && saturated_clique(s, scratch)) {
          return CostValue::infinite();
        }
      }
    }
    return base_->eval_refs(g, vertices, bags, scratch);
  }
  std::string name() const override { return base_->name() + "+constraints"; }

 private:
  // Is s a clique of g[vertices] with every bag saturated?
  static bool saturated_clique(const VertexSet& s, CostScratch& scratch) {
    const auto* smask = scratch.make_mask(s);
    const int words = scratch.words();
    for (int v : s) {
      const auto* row = scratch.row(v);
      const auto* grow = scratch.adjacency_row(v);
      for (int w = 0; w < words; ++w) {
        std::uint64_t required = smask[w];
        if (w == (v >> 6)) required &= ~(1ull << (v & 63));
        if (required & ~(row[w] | grow[w])) return false;
      }
    }
    return true;
  }

  BagCostPtr base_;
  ConstraintSet cs_;
};

}  // namespace

BagCostPtr width_cost() { return std::make_shared<WidthCost>(); }
BagCostPtr fill_cost() { return std::make_shared<FillCost>(); }
BagCostPtr lex_width_fill_cost() {
  return std::make_shared<LexWidthFillCost>();
}
BagCostPtr weighted_width_cost(std::vector<double> vertex_weights) {
  return std::make_shared<WeightedWidthCost>(std::move(vertex_weights));
}
BagCostPtr weighted_fill_cost(EdgeWeights weights) {
  return std::make_shared<WeightedFillCost>(std::move(weights));
}

std::uint64_t EdgeWeights::key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

void EdgeWeights::set(int u, int v, double w) {
  if (w < 0 || !std::isfinite(w)) {
    throw InvalidInputError("wfill: weights must be nonnegative finite");
  }
  weights[key(u, v)] = w;
}

double EdgeWeights::at(int u, int v) const {
  auto it = weights.find(key(u, v));
  if (it != weights.end()) return it->second;
  if (fallback) return *fallback;
  throw InvalidInputError("wfill: missing weight for edge {" +
                          std::to_string(u) + "," + std::to_string(v) + "}");
}

bool clique_in_saturation(const Graph& g, const std::vector<VertexSet>& bags,
                          const VertexSet& s) {
  if (!s.empty() && (s.min() < 0 || s[s.size() - 1] >= g.vertex_count())) {
    throw InvalidInputError("clique_in_saturation: vertex id out of range");
  }
  for (int i = 0; i < s.size(); ++i) {
    for (int j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) continue;
      bool in_bag = false;
      for (const auto& b : bags) {
        if (b.contains(s[i]) && b.contains(s[j])) {
          in_bag = true;
          break;
        }
      }
      if (!in_bag) return false;
    }
  }
  return true;
}

BagCostPtr wrap_constraints(BagCostPtr base, ConstraintSet constraints) {
  std::sort(constraints.include.begin(), constraints.include.end());
  std::sort(constraints.exclude.begin(), constraints.exclude.end());
  return std::make_shared<ConstrainedCost>(std::move(base),
                                           std::move(constraints));
}

}  // namespace tdecomp
