#ifndef TDECOMP_IO_HPP
#define TDECOMP_IO_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <string>

#include "tdecomp/graph.hpp"

namespace tdecomp {

enum class GraphFormat {
  PaceGr,    // "c" comments, "p tw <n> <m>" header, 1-indexed edge lines
  DimacsCol, // "c" comments, "p edge <n> <m>" header, "e <u> <v>" lines
  EdgeList,  // one "u v" pair per line, arbitrary string labels, "#" comments
};

// Parses "gr", "col" or "edges"/"edgelist".
std::optional<GraphFormat> parse_format(const std::string& name);

// Chooses a format from the file extension (.gr, .col; anything else is an
// edge list).
GraphFormat format_from_path(const std::string& path);

// Throws ParseError (with a line number) on malformed input; duplicate edges
// and self-loops are rejected in every format.
Graph read_graph(std::istream& in, GraphFormat format);
Graph read_graph(const std::string& path,
                 std::optional<GraphFormat> format = {});

// Seeded Erdős–Rényi graph: every pair is an edge independently with
// probability p. The same (n, p, seed) always yields the same graph.
Graph gen_gnp(int n, double p, std::uint64_t seed);

}  // namespace tdecomp

#endif  // TDECOMP_IO_HPP
