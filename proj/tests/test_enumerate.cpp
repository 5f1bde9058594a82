#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tdecomp/enumerate.hpp"
#include "tdecomp/oracle.hpp"

using namespace tdecomp;
using namespace tdecomp::testing;

namespace {

std::vector<Emission> collect(const Graph& g, const BagCostPtr& k,
                              EnumerationSummary* summary = nullptr,
                              const EnumerationLimits& limits = {}) {
  std::vector<Emission> out;
  auto s = ranked_triang(g, k,
                         [&](const Emission& e) {
                           out.push_back(e);
                           return true;
                         },
                         limits);
  if (summary) *summary = s;
  return out;
}

std::vector<VertexSet> sorted(std::vector<VertexSet> bags) {
  std::sort(bags.begin(), bags.end());
  return bags;
}

}  // namespace

TEST_CASE("ranked enumeration on the running example") {
  Graph g = paper_graph();

  SUBCASE("fill: T2 then T1, costs 1 and 3") {
    EnumerationSummary summary;
    auto results = collect(g, fill_cost(), &summary);
    REQUIRE(results.size() == 2);
    CHECK(results[0].result.bags == sorted(bags_t2()));
    CHECK(results[0].result.cost == CostValue(1));
    CHECK(results[1].result.bags == sorted(bags_t1()));
    CHECK(results[1].result.cost == CostValue(3));
    CHECK(summary.exhausted);
    CHECK(summary.emitted == 2);
  }
  SUBCASE("width: costs 2 then 3") {
    auto results = collect(g, width_cost());
    REQUIRE(results.size() == 2);
    CHECK(results[0].result.cost == CostValue(2));
    CHECK(results[1].result.cost == CostValue(3));
  }
  SUBCASE("first emission needs exactly one optimizer call") {
    auto results = collect(g, fill_cost());
    REQUIRE(!results.empty());
    CHECK(results[0].optimizer_calls == 1);
  }
  SUBCASE("sink can stop the stream") {
    int seen = 0;
    auto summary = ranked_triang(g, fill_cost(), [&](const Emission&) {
      ++seen;
      return false;
    });
    CHECK(seen == 1);
    CHECK(summary.emitted == 1);
    CHECK_FALSE(summary.exhausted);
  }
  SUBCASE("max_results limit") {
    EnumerationSummary summary;
    EnumerationLimits limits;
    limits.max_results = 1;
    auto results = collect(g, fill_cost(), &summary, limits);
    CHECK(results.size() == 1);
    CHECK_FALSE(summary.exhausted);
  }
}

TEST_CASE("chordal graphs emit exactly themselves") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 10; ++t) {
    Graph h = random_chordal(12, 0.25, rng);
    EnumerationSummary summary;
    auto results = collect(h, fill_cost(), &summary);
    REQUIRE(results.size() == 1);
    CHECK(results[0].result.fill_edges.empty());
    CHECK(results[0].result.bags == maximal_cliques_chordal(h));
    CHECK(summary.exhausted);
  }
}

TEST_CASE("completeness, uniqueness and order against the oracle") {
  std::mt19937_64 rng(103);
  std::vector<BagCostPtr> costs{width_cost(), fill_cost(),
                                lex_width_fill_cost()};
  for (int t = 0; t < 30; ++t) {
    int n = 4 + static_cast<int>(rng() % 4);
    Graph g = random_connected(n, 0.25 + 0.15 * static_cast<double>(rng() % 3),
                               rng);
    auto brute = oracle::brute_min_triangs(g);
    for (const auto& k : costs) {
      auto results = collect(g, k);
      REQUIRE(results.size() == brute.size());
      std::vector<std::vector<VertexSet>> seen;
      for (std::size_t i = 0; i < results.size(); ++i) {
        seen.push_back(results[i].result.bags);
        if (i > 0) {
          CHECK(results[i - 1].result.cost <= results[i].result.cost);
        }
      }
      std::sort(seen.begin(), seen.end());
      CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
      std::vector<std::vector<VertexSet>> expect;
      for (const auto& tr : brute) expect.push_back(tr.bags);
      std::sort(expect.begin(), expect.end());
      CHECK(seen == expect);
    }
  }
}

TEST_CASE("partition regions stay disjoint and exhaustive") {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 12; ++t) {
    int n = 4 + static_cast<int>(rng() % 3);
    Graph g = random_connected(n, 0.4, rng);
    auto brute = oracle::brute_min_triangs(g);

    auto satisfied_count = [&](const ConstraintSet& cs) {
      int count = 0;
      for (const auto& tr : brute) {
        bool ok = true;
        for (const auto& s : cs.include) {
          if (!clique_in_saturation(g, tr.bags, s)) ok = false;
        }
        for (const auto& s : cs.exclude) {
          if (clique_in_saturation(g, tr.bags, s)) ok = false;
        }
        if (ok) ++count;
      }
      return count;
    };

    ranked_triang(
        g, fill_cost(), [](const Emission&) { return true; }, {},
        [&](const PartitionTrace& trace) {
          int region_size = satisfied_count(trace.region);
          int child_total = 0;
          for (const auto& [child, pushed] : trace.children) {
            int child_size = satisfied_count(child);
            CHECK((child_size > 0) == pushed);
            child_total += child_size;
          }
          // children plus the emitted element partition the region
          CHECK(region_size == child_total + 1);
        });
  }
}

TEST_CASE("bounded enumeration") {
  Graph g = paper_graph();

  auto run_bounded = [&](int b) {
    std::vector<Emission> out;
    ranked_triang_bounded(g, fill_cost(), b, [&](const Emission& e) {
      out.push_back(e);
      return true;
    });
    return out;
  };

  SUBCASE("bound 2 keeps only T2") {
    auto results = run_bounded(2);
    REQUIRE(results.size() == 1);
    CHECK(results[0].result.bags == sorted(bags_t2()));
  }
  SUBCASE("bound 1 yields an empty stream") {
    CHECK(run_bounded(1).empty());
  }
  SUBCASE("bound n-1 matches the unbounded stream") {
    auto bounded = run_bounded(5);
    auto full = collect(g, fill_cost());
    REQUIRE(bounded.size() == full.size());
    for (std::size_t i = 0; i < full.size(); ++i) {
      CHECK(bounded[i].result.bags == full[i].result.bags);
      CHECK(bounded[i].result.cost == full[i].result.cost);
    }
  }
}

TEST_CASE("clique trees") {
  Graph g = paper_graph();

  SUBCASE("T1 bags give the unique path tree") {
    auto td = build_clique_tree(g, sorted(bags_t1()));
    CHECK(verify_tree_decomposition(g, td, true));
    MinSepSet a = adhesions(td);
    REQUIRE(a.size() == 2);
    CHECK(a.contains(sep1()));
    CHECK(a.contains(sep3()));
  }
  SUBCASE("T2 bags give a valid clique tree with {u,v} adhesions") {
    auto td = build_clique_tree(g, sorted(bags_t2()));
    CHECK(verify_tree_decomposition(g, td, true));
    MinSepSet a = adhesions(td);
    REQUIRE(a.size() == 2);
    CHECK(a.contains(sep2()));
    CHECK(a.contains(sep3()));
  }
  SUBCASE("single bag") {
    Graph k3 = complete(3);
    auto td = build_clique_tree(k3, {VertexSet::range(3)});
    CHECK(td.edges.empty());
    CHECK(adhesions(td).empty());
    CHECK(verify_tree_decomposition(k3, td, true));
  }
  SUBCASE("emitted triangulations yield proper tree decompositions") {
    std::mt19937_64 rng(109);
    for (int t = 0; t < 15; ++t) {
      Graph r = random_connected(6, 0.4, rng);
      collect(r, fill_cost());
      ranked_triang(r, fill_cost(), [&](const Emission& e) {
        auto td = build_clique_tree(r, e.result.bags);
        CHECK(verify_tree_decomposition(r, td, true));
        return true;
      });
    }
  }
}

TEST_CASE("round-trip through minimal separators") {
  // Saturating MinSep(H) in g reproduces H; MinSep(H) is a maximal
  // pairwise-parallel family.
  std::mt19937_64 rng(113);
  for (int t = 0; t < 15; ++t) {
    int n = 4 + static_cast<int>(rng() % 4);
    Graph g = random_connected(n, 0.4, rng);
    MinSepSet all = enumerate_min_seps(g);
    ranked_triang(g, fill_cost(), [&](const Emission& e) {
      MinSepSet m = min_seps_of_triangulation(g, e.result);
      for (int i = 0; i < m.size(); ++i) {
        CHECK(is_min_sep(g, m[i]));
        for (int j = i + 1; j < m.size(); ++j) {
          CHECK_FALSE(crosses(g, m[i], m[j]));
        }
      }
      for (const auto& s : all) {
        if (m.contains(s)) continue;
        bool crossed = false;
        for (const auto& t2 : m) {
          if (crosses(g, s, t2)) {
            crossed = true;
            break;
          }
        }
        CHECK(crossed);
      }
      Graph h = g;
      for (const auto& s : m) h = saturate(h, s);
      auto [h2, fill] = triangulation_edges(g, e.result.bags);
      CHECK(h == h2);
      (void)fill;
      return true;
    });
  }
}
