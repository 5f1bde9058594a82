#include "tdecomp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tdecomp/errors.hpp"

namespace tdecomp {

VertexSet::VertexSet(std::initializer_list<int> ids)
    : VertexSet(std::vector<int>(ids)) {}

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.ids_.resize(static_cast<std::size_t>(n));
  std::iota(s.ids_.begin(), s.ids_.end(), 0);
  return s;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

bool VertexSet::is_strict_subset_of(const VertexSet& other) const {
  return size() < other.size() && is_subset_of(other);
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

VertexSet VertexSet::with(int v) const {
  if (contains(v)) return *this;
  VertexSet out;
  out.ids_.reserve(ids_.size() + 1);
  auto pos = std::lower_bound(ids_.begin(), ids_.end(), v);
  out.ids_.insert(out.ids_.end(), ids_.begin(), pos);
  out.ids_.push_back(v);
  out.ids_.insert(out.ids_.end(), pos, ids_.end());
  return out;
}

VertexSet VertexSet::without(int v) const {
  VertexSet out = *this;
  auto pos = std::lower_bound(out.ids_.begin(), out.ids_.end(), v);
  if (pos != out.ids_.end() && *pos == v) out.ids_.erase(pos);
  return out;
}

VertexSet VertexSet::unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.ids_.reserve(a.ids_.size() + b.ids_.size());
  std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(),
                      b.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(),
                        b.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i) os << ',';
    os << ids_[i];
  }
  os << '}';
  return os.str();
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))),
      labels_(std::move(labels)) {
  if (n < 0) throw InvalidInputError("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw InvalidInputError("label count does not match vertex count");
  }
  for (const auto& [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw InvalidInputError("self-loop at vertex " + std::to_string(u));
    }
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    m_ += static_cast<long long>(nbrs.size());
  }
  m_ /= 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InvalidInputError("vertex id " + std::to_string(v) +
                            " out of range [0," + std::to_string(n_) + ")");
  }
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(int v) const {
  check_vertex(v);
  if (!labels_.empty()) return labels_[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u) {
  if (!u.empty() &&
      (u.min() < 0 || u[u.size() - 1] >= g.vertex_count())) {
    throw InvalidInputError("induced_subgraph: vertex id out of range");
  }
  std::vector<int> original(u.begin(), u.end());
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(original.size());
    for (int v : original) labels.push_back(g.label(v));
  }
  for (int i = 0; i < u.size(); ++i) {
    for (int w : g.neighbors(u[i])) {
      if (w <= u[i] || !u.contains(w)) continue;
      int j = static_cast<int>(
          std::lower_bound(original.begin(), original.end(), w) -
          original.begin());
      edges.emplace_back(i, j);
    }
  }
  return InducedSubgraph{Graph(u.size(), edges, std::move(labels)),
                         std::move(original)};
}

Graph saturate(const Graph& g, const VertexSet& u) {
  if (!u.empty() && (u.min() < 0 || u[u.size() - 1] >= g.vertex_count())) {
    throw InvalidInputError("saturate: vertex id out of range");
  }
  auto edges = g.edges();
  for (int i = 0; i < u.size(); ++i) {
    for (int j = i + 1; j < u.size(); ++j) {
      edges.emplace_back(u[i], u[j]);
    }
  }
  std::vector<std::string> labels = g.labels();
  return Graph(g.vertex_count(), edges, std::move(labels));
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& u) {
  if (!u.empty() && (u.min() < 0 || u[u.size() - 1] >= g.vertex_count())) {
    throw InvalidInputError("components: vertex id out of range");
  }
  int n = g.vertex_count();
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  for (int v : u) blocked[static_cast<std::size_t>(v)] = 1;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> out;
  std::vector<int> stack, comp;
  for (int s = 0; s < n; ++s) {
    if (blocked[static_cast<std::size_t>(s)] ||
        seen[static_cast<std::size_t>(s)]) {
      continue;
    }
    comp.clear();
    stack.push_back(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!blocked[static_cast<std::size_t>(w)] &&
            !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(comp);
  }
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& c) {
  std::vector<int> nbrs;
  for (int v : c) {
    for (int w : g.neighbors(v)) {
      if (!c.contains(w)) nbrs.push_back(w);
    }
  }
  return VertexSet(std::move(nbrs));
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  std::vector<int> ids = g.neighbors(v);
  ids.push_back(v);
  return VertexSet(std::move(ids));
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return components(g, VertexSet{}).size() == 1;
}

namespace {

// Maximum-cardinality search. Returns the selection order; the reverse of it
// is a perfect elimination ordering iff the graph is chordal.
std::vector<int> mcs_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> picked(static_cast<std::size_t>(n), 0);
  // Bucket queue over weights keeps the scan linear.
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(n + 1));
  for (int v = 0; v < n; ++v) buckets[0].push_back(v);
  int maxw = 0;
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int v = -1;
    while (true) {
      auto& b = buckets[static_cast<std::size_t>(maxw)];
      while (!b.empty()) {
        int cand = b.back();
        if (picked[static_cast<std::size_t>(cand)] ||
            weight[static_cast<std::size_t>(cand)] != maxw) {
          b.pop_back();  // stale entry
          continue;
        }
        v = cand;
        b.pop_back();
        break;
      }
      if (v >= 0) break;
      --maxw;
    }
    picked[static_cast<std::size_t>(v)] = 1;
    order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (picked[static_cast<std::size_t>(w)]) continue;
      int nw = ++weight[static_cast<std::size_t>(w)];
      buckets[static_cast<std::size_t>(nw)].push_back(w);
      maxw = std::max(maxw, nw);
    }
  }
  return order;
}

// Verifies that the reverse of the MCS selection order eliminates perfectly.
// Fills elim_order (position -> vertex) on success.
bool check_peo(const Graph& g, const std::vector<int>& selection,
               std::vector<int>* elim_order) {
  int n = g.vertex_count();
  std::vector<int> order(selection.rbegin(), selection.rend());
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = i;
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<std::size_t>(i)];
    // Later neighbors of v; the first-eliminated of them must see the rest.
    int parent = -1, parent_pos = n;
    for (int w : g.neighbors(v)) {
      int pw = pos[static_cast<std::size_t>(w)];
      if (pw > i && pw < parent_pos) {
        parent = w;
        parent_pos = pw;
      }
    }
    if (parent < 0) continue;
    for (int w : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(w)] <= i || w == parent) continue;
      if (!g.adjacent(parent, w)) return false;
    }
  }
  if (elim_order) *elim_order = std::move(order);
  return true;
}

}  // namespace

bool is_chordal(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return check_peo(g, mcs_order(g), nullptr);
}

std::vector<VertexSet> maximal_cliques_chordal(const Graph& g) {
  if (g.vertex_count() == 0) return {};
  std::vector<int> order;
  if (!check_peo(g, mcs_order(g), &order)) {
    throw PreconditionError("maximal_cliques_chordal: graph is not chordal");
  }
  int n = g.vertex_count();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = i;
  // Candidate cliques {v} ∪ later-neighbors(v); exactly the ⊆-maximal ones
  // survive.
  std::vector<VertexSet> cands;
  cands.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<std::size_t>(i)];
    std::vector<int> c{v};
    for (int w : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(w)] > i) c.push_back(w);
    }
    cands.emplace_back(std::move(c));
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const VertexSet& a, const VertexSet& b) {
                     return a.size() > b.size();
                   });
  std::vector<VertexSet> out;
  for (const auto& c : cands) {
    bool dominated = false;
    for (const auto& kept : out) {
      if (c.is_subset_of(kept)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_clique(const Graph& g, const VertexSet& u) {
  for (int i = 0; i < u.size(); ++i) {
    for (int j = i + 1; j < u.size(); ++j) {
      if (!g.adjacent(u[i], u[j])) return false;
    }
  }
  return true;
}

}  // namespace tdecomp
