#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "tdecomp/errors.hpp"
#include "tdecomp/io.hpp"
#include "tdecomp/separators.hpp"

using namespace tdecomp;
using namespace tdecomp::testing;

TEST_CASE("pace gr format") {
  SUBCASE("minimal K2") {
    std::istringstream in("p tw 2 1\n1 2\n");
    Graph g = read_graph(in, GraphFormat::PaceGr);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 1));
  }
  SUBCASE("comments and the running example") {
    std::istringstream in(
        "c the running example\n"
        "p tw 6 7\n"
        "1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n2 6\n");
    Graph g = read_graph(in, GraphFormat::PaceGr);
    MinSepSet seps = enumerate_min_seps(g);
    REQUIRE(seps.size() == 3);
    CHECK(seps.contains(VertexSet{2, 3, 4}));
    CHECK(seps.contains(VertexSet{0, 1}));
    CHECK(seps.contains(VertexSet{1}));
  }
  SUBCASE("self-loop rejected with a line number") {
    std::istringstream in("p tw 2 1\n1 1\n");
    try {
      read_graph(in, GraphFormat::PaceGr);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("duplicate edge rejected") {
    std::istringstream in("p tw 3 3\n1 2\n2 3\n2 1\n");
    CHECK_THROWS_AS(read_graph(in, GraphFormat::PaceGr), ParseError);
  }
  SUBCASE("vertex out of range") {
    std::istringstream in("p tw 2 1\n1 3\n");
    CHECK_THROWS_AS(read_graph(in, GraphFormat::PaceGr), ParseError);
  }
  SUBCASE("edge count mismatch") {
    std::istringstream in("p tw 3 2\n1 2\n");
    CHECK_THROWS_AS(read_graph(in, GraphFormat::PaceGr), ParseError);
  }
  SUBCASE("missing header") {
    std::istringstream in("1 2\n");
    CHECK_THROWS_AS(read_graph(in, GraphFormat::PaceGr), ParseError);
  }
}

TEST_CASE("dimacs col format") {
  std::istringstream in("c coloring instance\np edge 3 2\ne 1 2\ne 2 3\n");
  Graph g = read_graph(in, GraphFormat::DimacsCol);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("edge list format") {
  SUBCASE("string labels in first-appearance order") {
    std::istringstream in("# comment\nalpha beta\nbeta gamma\n");
    Graph g = read_graph(in, GraphFormat::EdgeList);
    CHECK(g.vertex_count() == 3);
    CHECK(g.label(0) == "alpha");
    CHECK(g.label(1) == "beta");
    CHECK(g.label(2) == "gamma");
    CHECK(g.adjacent(0, 1));
  }
  SUBCASE("self-loops rejected") {
    std::istringstream in("a a\n");
    CHECK_THROWS_AS(read_graph(in, GraphFormat::EdgeList), ParseError);
  }
  SUBCASE("duplicates rejected") {
    std::istringstream in("a b\nb a\n");
    CHECK_THROWS_AS(read_graph(in, GraphFormat::EdgeList), ParseError);
  }
}

TEST_CASE("format detection") {
  CHECK(format_from_path("x/y/graph.gr") == GraphFormat::PaceGr);
  CHECK(format_from_path("queen5_5.col") == GraphFormat::DimacsCol);
  CHECK(format_from_path("pairs.txt") == GraphFormat::EdgeList);
  CHECK(parse_format("gr") == GraphFormat::PaceGr);
  CHECK(parse_format("col") == GraphFormat::DimacsCol);
  CHECK(parse_format("edges") == GraphFormat::EdgeList);
  CHECK_FALSE(parse_format("???").has_value());
}

TEST_CASE("gnp generation") {
  SUBCASE("p=0 and p=1") {
    CHECK(gen_gnp(10, 0.0, 1).edge_count() == 0);
    CHECK(gen_gnp(10, 1.0, 1).edge_count() == 45);
  }
  SUBCASE("seeded determinism") {
    Graph a = gen_gnp(20, 0.5, 7);
    Graph b = gen_gnp(20, 0.5, 7);
    CHECK(a == b);
    Graph c = gen_gnp(20, 0.5, 8);
    CHECK_FALSE(a == c);  // overwhelmingly likely
  }
  SUBCASE("bad parameters") {
    CHECK_THROWS_AS(gen_gnp(5, 1.5, 0), InvalidInputError);
    CHECK_THROWS_AS(gen_gnp(-1, 0.5, 0), InvalidInputError);
  }
}
