#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tdecomp/errors.hpp"
#include "tdecomp/oracle.hpp"
#include "tdecomp/pmc.hpp"

using namespace tdecomp;
using namespace tdecomp::testing;

namespace {

std::vector<VertexSet> paper_pmcs() {
  return {VertexSet{kU, kW1, kW2, kW3}, VertexSet{kV, kW1, kW2, kW3},
          VertexSet{kV, kVp},           VertexSet{kU, kV, kW1},
          VertexSet{kU, kV, kW2},       VertexSet{kU, kV, kW3}};
}

}  // namespace

TEST_CASE("is_pmc") {
  Graph g = paper_graph();
  CHECK(is_pmc(g, VertexSet{kW1, kU, kV}));
  CHECK_FALSE(is_pmc(g, sep2()));
  CHECK(is_pmc(complete(4), VertexSet::range(4)));
  CHECK_FALSE(is_pmc(g, VertexSet{}));

  SUBCASE("agrees with the definitional oracle on every subset") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 40; ++t) {
      int n = 4 + static_cast<int>(rng() % 3);
      Graph r = random_connected(n, 0.4, rng);
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> ids;
        for (int v = 0; v < n; ++v) {
          if (mask & (1u << v)) ids.push_back(v);
        }
        VertexSet omega(ids);
        CHECK(is_pmc(r, omega) == oracle::brute_is_pmc(r, omega));
      }
    }
  }
  SUBCASE("works on disconnected graphs") {
    Graph g2(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(is_pmc(g2, VertexSet{0, 1}));
    CHECK(is_pmc(g2, VertexSet{3, 4}));
    CHECK_FALSE(is_pmc(g2, VertexSet{1}));
    CHECK_FALSE(is_pmc(g2, VertexSet{0, 2}));
  }
}

TEST_CASE("enumerate_pmcs") {
  SUBCASE("running example has exactly six") {
    Graph g = paper_graph();
    PmcSet pmcs = enumerate_pmcs(g, enumerate_min_seps(g));
    auto expect = paper_pmcs();
    std::sort(expect.begin(), expect.end());
    CHECK(pmcs.omegas() == expect);
  }
  SUBCASE("tree edges are its PMCs") {
    Graph tree(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    PmcSet pmcs = enumerate_pmcs(tree, enumerate_min_seps(tree));
    REQUIRE(pmcs.size() == 4);
    for (const auto& info : pmcs) {
      CHECK(info.omega.size() == 2);
      CHECK(tree.adjacent(info.omega[0], info.omega[1]));
    }
  }
  SUBCASE("C5 has the ten edge-containing triples") {
    Graph c5 = cycle(5);
    PmcSet pmcs = enumerate_pmcs(c5, enumerate_min_seps(c5));
    REQUIRE(pmcs.size() == 10);
    for (const auto& info : pmcs) {
      CHECK(info.omega.size() == 3);
      CHECK(oracle::brute_is_pmc(c5, info.omega));
      bool has_edge = false;
      for (int i = 0; i < 3 && !has_edge; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          if (c5.adjacent(info.omega[i], info.omega[j])) has_edge = true;
        }
      }
      CHECK(has_edge);
    }
  }
  SUBCASE("matches the oracle on random connected graphs") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 120; ++t) {
      int n = 4 + static_cast<int>(rng() % 4);
      double p = 0.2 + 0.2 * static_cast<double>(rng() % 3);
      Graph g = random_connected(n, p, rng);
      PmcSet pmcs = enumerate_pmcs(g, enumerate_min_seps(g));
      std::vector<VertexSet> brute;
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> ids;
        for (int v = 0; v < n; ++v) {
          if (mask & (1u << v)) ids.push_back(v);
        }
        VertexSet omega(ids);
        if (oracle::brute_is_pmc(g, omega)) brute.push_back(omega);
      }
      std::sort(brute.begin(), brute.end());
      CHECK(pmcs.omegas() == brute);
    }
  }
  SUBCASE("result set does not depend on the insertion order") {
    std::mt19937_64 rng(47);
    Graph g = paper_graph();
    MinSepSet seps = enumerate_min_seps(g);
    auto reference = enumerate_pmcs(g, seps).omegas();
    std::vector<int> order{0, 1, 2, 3, 4, 5};
    for (int t = 0; t < 10; ++t) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(enumerate_pmcs_with_order(g, seps, order).omegas() == reference);
    }
  }
  SUBCASE("disconnected graphs combine per-component PMCs") {
    Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
    PmcSet pmcs = enumerate_pmcs(g, enumerate_min_seps(g));
    REQUIRE(pmcs.size() == 3);
    CHECK(pmcs.contains(VertexSet{0, 1}));
    CHECK(pmcs.contains(VertexSet{1, 2}));
    CHECK(pmcs.contains(VertexSet{3, 4}));
  }
  SUBCASE("item budget trips with the PMC stage tag") {
    Graph g = paper_graph();
    Budget b;
    b.max_items = 2;
    try {
      enumerate_pmcs(g, enumerate_min_seps(g), b);
      FAIL("expected BudgetExceededError");
    } catch (const BudgetExceededError& e) {
      CHECK(e.stage() == BudgetExceededError::Stage::PotentialMaximalCliques);
    }
  }
}

TEST_CASE("pmc associations") {
  Graph g = paper_graph();

  SUBCASE("minseps_of_pmc") {
    MinSepSet assoc = minseps_of_pmc(g, VertexSet{kW1, kU, kV});
    REQUIRE(assoc.size() == 2);
    CHECK(assoc.contains(sep2()));
    CHECK(assoc.contains(sep3()));
    CHECK(minseps_of_pmc(complete(3), VertexSet::range(3)).empty());
    MinSepSet assoc1 = minseps_of_pmc(g, VertexSet{kU, kW1, kW2, kW3});
    REQUIRE(assoc1.size() == 1);
    CHECK(assoc1.contains(sep1()));
  }
  SUBCASE("blocks_of_pmc") {
    auto blocks = blocks_of_pmc(g, VertexSet{kW1, kU, kV});
    REQUIRE(blocks.size() == 3);
    CHECK(std::find(blocks.begin(), blocks.end(),
                    Block{sep2(), VertexSet{kW2}}) != blocks.end());
    CHECK(std::find(blocks.begin(), blocks.end(),
                    Block{sep2(), VertexSet{kW3}}) != blocks.end());
    CHECK(std::find(blocks.begin(), blocks.end(),
                    Block{sep3(), VertexSet{kVp}}) != blocks.end());
    CHECK(blocks_of_pmc(complete(3), VertexSet::range(3)).empty());
    auto blocks1 = blocks_of_pmc(g, VertexSet{kU, kW1, kW2, kW3});
    REQUIRE(blocks1.size() == 1);
    CHECK(blocks1[0] == Block{sep1(), VertexSet{kV, kVp}});
  }
  SUBCASE("pmcs_in_block") {
    PmcSet pmcs = enumerate_pmcs(g, enumerate_min_seps(g));
    auto in1 = pmcs_in_block(pmcs, Block{sep1(), VertexSet{kU}});
    REQUIRE(in1.size() == 1);
    CHECK(in1[0] == VertexSet{kU, kW1, kW2, kW3});
    auto in2 = pmcs_in_block(pmcs, Block{sep3(), VertexSet{kVp}});
    REQUIRE(in2.size() == 1);
    CHECK(in2[0] == VertexSet{kV, kVp});
    auto in3 = pmcs_in_block(pmcs, Block{sep2(), VertexSet{kW1}});
    REQUIRE(in3.size() == 1);
    CHECK(in3[0] == VertexSet{kU, kV, kW1});
  }
  SUBCASE("associated separators are strict subsets; blocks are full") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 30; ++t) {
      Graph r = random_connected(6, 0.4, rng);
      MinSepSet seps = enumerate_min_seps(r);
      auto blocks = full_blocks(r, seps);
      PmcSet pmcs = enumerate_pmcs(r, seps);
      for (const auto& info : pmcs) {
        for (const auto& s : info.seps) {
          CHECK(s.is_strict_subset_of(info.omega));
        }
        // No other minimal separator is contained in omega.
        for (const auto& s : seps) {
          if (s.is_subset_of(info.omega)) {
            CHECK(info.seps.contains(s));
          }
        }
        for (const auto& b : info.blocks) {
          CHECK(neighborhood(r, b.c) == b.s);
          CHECK(std::find(blocks.begin(), blocks.end(), b) != blocks.end());
        }
      }
    }
  }
}
