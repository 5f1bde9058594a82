#include "tdecomp/io.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tdecomp/errors.hpp"

namespace tdecomp {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

long long parse_ll(const std::string& t, int line, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + t + "'");
  }
}

struct EdgeAccumulator {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::unordered_set<std::uint64_t> seen;

  void add(int u, int v, int line) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(line, "vertex out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(line, "self-loop rejected");
    int a = std::min(u, v) - 1;
    int b = std::max(u, v) - 1;
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) |
                        static_cast<std::uint32_t>(b);
    if (!seen.insert(key).second) {
      throw ParseError(line, "duplicate edge rejected");
    }
    edges.emplace_back(a, b);
  }
};

Graph read_header_format(std::istream& in, const std::string& header_kind,
                         const std::string& edge_prefix) {
  std::string line;
  int lineno = 0;
  EdgeAccumulator acc;
  long long declared_m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    auto ts = tokens(line);
    if (ts.empty() || ts[0] == "c") continue;
    if (ts[0] == "p") {
      if (declared_m >= 0) throw ParseError(lineno, "duplicate header");
      if (ts.size() != 4 || ts[1] != header_kind) {
        throw ParseError(lineno, "malformed header; expected 'p " +
                                     header_kind + " <n> <m>'");
      }
      long long n = parse_ll(ts[2], lineno, "vertex count");
      declared_m = parse_ll(ts[3], lineno, "edge count");
      if (n < 0 || declared_m < 0) {
        throw ParseError(lineno, "negative counts in header");
      }
      acc.n = static_cast<int>(n);
      continue;
    }
    if (declared_m < 0) {
      throw ParseError(lineno, "edge line before header");
    }
    if (!edge_prefix.empty()) {
      if (ts[0] != edge_prefix || ts.size() != 3) {
        throw ParseError(lineno, "malformed edge line; expected '" +
                                     edge_prefix + " <u> <v>'");
      }
      acc.add(static_cast<int>(parse_ll(ts[1], lineno, "vertex id")),
              static_cast<int>(parse_ll(ts[2], lineno, "vertex id")), lineno);
    } else {
      if (ts.size() != 2) {
        throw ParseError(lineno, "malformed edge line; expected '<u> <v>'");
      }
      acc.add(static_cast<int>(parse_ll(ts[0], lineno, "vertex id")),
              static_cast<int>(parse_ll(ts[1], lineno, "vertex id")), lineno);
    }
  }
  if (declared_m < 0) throw ParseError(lineno, "missing header");
  if (static_cast<long long>(acc.edges.size()) != declared_m) {
    throw ParseError(lineno, "header declares " + std::to_string(declared_m) +
                                 " edges, file has " +
                                 std::to_string(acc.edges.size()));
  }
  return Graph(acc.n, acc.edges);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::unordered_map<std::string, int> ids;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  std::unordered_set<std::uint64_t> seen;
  auto intern = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(name);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto ts = tokens(line);
    if (ts.empty() || ts[0][0] == '#') continue;
    if (ts.size() != 2) {
      throw ParseError(lineno, "malformed edge line; expected '<u> <v>'");
    }
    int u = intern(ts[0]);
    int v = intern(ts[1]);
    if (u == v) throw ParseError(lineno, "self-loop rejected");
    int a = std::min(u, v);
    int b = std::max(u, v);
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) |
                        static_cast<std::uint32_t>(b);
    if (!seen.insert(key).second) {
      throw ParseError(lineno, "duplicate edge rejected");
    }
    edges.emplace_back(a, b);
  }
  int n = static_cast<int>(labels.size());
  return Graph(n, edges, std::move(labels));
}

}  // namespace

std::optional<GraphFormat> parse_format(const std::string& name) {
  if (name == "gr" || name == "pace") return GraphFormat::PaceGr;
  if (name == "col" || name == "dimacs") return GraphFormat::DimacsCol;
  if (name == "edges" || name == "edgelist" || name == "edge-list") {
    return GraphFormat::EdgeList;
  }
  return std::nullopt;
}

GraphFormat format_from_path(const std::string& path) {
  auto dot = path.find_last_of('.');
  if (dot != std::string::npos) {
    std::string ext = path.substr(dot + 1);
    if (ext == "gr") return GraphFormat::PaceGr;
    if (ext == "col") return GraphFormat::DimacsCol;
  }
  return GraphFormat::EdgeList;
}

Graph read_graph(std::istream& in, GraphFormat format) {
  switch (format) {
    case GraphFormat::PaceGr:
      return read_header_format(in, "tw", "");
    case GraphFormat::DimacsCol:
      return read_header_format(in, "edge", "e");
    case GraphFormat::EdgeList:
      return read_edge_list(in);
  }
  throw InvalidInputError("unknown graph format");
}

Graph read_graph(const std::string& path, std::optional<GraphFormat> format) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open '" + path + "'");
  return read_graph(in, format.value_or(format_from_path(path)));
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) {
    throw InvalidInputError("gen_gnp: need n >= 0 and p in [0,1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // Top 53 bits as a uniform double in [0,1); avoids the
      // implementation-defined std distributions.
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

}  // namespace tdecomp
