"""Smoke tests for the tdecomp python module."""

import math

import pytest

import tdecomp

# The running example: a cycle u-w1-v-w2-u thickened by w3, plus a pendant v'.
U, V, W1, W2, W3, VP = range(6)
PAPER_EDGES = [(U, W1), (U, W2), (U, W3), (V, W1), (V, W2), (V, W3), (V, VP)]


@pytest.fixture
def paper():
    return tdecomp.Graph(6, PAPER_EDGES, ["u", "v", "w1", "w2", "w3", "v'"])


def test_graph_basics(paper):
    assert paper.n == 6
    assert paper.m == 7
    assert paper.adjacent(U, W1)
    assert not paper.adjacent(U, V)
    assert paper.label(VP) == "v'"
    assert not tdecomp.is_chordal(paper)
    assert tdecomp.is_connected(paper)


def test_min_seps(paper):
    seps = tdecomp.min_seps(paper)
    assert sorted(seps) == sorted([[W1, W2, W3], [U, V], [V]])
    assert tdecomp.min_seps(paper) == tdecomp.oracle.min_seps(paper)


def test_pmcs(paper):
    pmcs = tdecomp.pmcs(paper)
    assert len(pmcs) == 6
    assert sorted([U, V, W1]) in pmcs
    assert sorted([U, W1, W2, W3]) in pmcs


def test_optimize(paper):
    best = tdecomp.optimize(paper, cost="fill")
    assert best["cost"] == 1
    assert best["fill_edges"] == [(U, V)]
    assert best["width"] == 2
    assert best["feasible"]

    widest = tdecomp.optimize(paper, cost="width")
    assert widest["cost"] == 2

    assert tdecomp.optimize(paper, width_bound=1) is None


def test_enumerate(paper):
    results, summary = tdecomp.enumerate_triangulations(paper, cost="fill")
    assert [r["cost"] for r in results] == [1, 3]
    assert summary["exhausted"]
    assert summary["emitted"] == 2
    assert results[0]["optimizer_calls"] == 1

    t2_bags = sorted(
        [sorted([U, V, W1]), sorted([U, V, W2]), sorted([U, V, W3]), [V, VP]]
    )
    assert results[0]["bags"] == t2_bags

    bounded, bsummary = tdecomp.enumerate_triangulations(
        paper, cost="fill", width_bound=1
    )
    assert bounded == []
    assert bsummary["emitted"] == 0


def test_enumeration_matches_oracle():
    g = tdecomp.gnp(7, 0.4, seed=11)
    if not tdecomp.is_connected(g):
        pytest.skip("seeded sample should be connected")
    results, summary = tdecomp.enumerate_triangulations(g, cost="width")
    assert summary["exhausted"]
    got = sorted(tuple(map(tuple, r["bags"])) for r in results)
    expect = sorted(
        tuple(map(tuple, t["bags"])) for t in tdecomp.oracle.min_triangs(g)
    )
    assert got == expect
    costs = [r["cost"] for r in results]
    assert costs == sorted(costs)


def test_weighted_costs(paper):
    heavy_uv = tdecomp.optimize(
        paper, edge_weights={(U, V): 5.0}, edge_weight_default=1.0
    )
    assert heavy_uv["cost"] == 3  # T1's three unit edges beat one weight-5 edge


def test_clique_tree(paper):
    best = tdecomp.optimize(paper, cost="fill")
    tree = tdecomp.clique_tree(paper, best["bags"])
    assert tree["valid"]
    assert len(tree["nodes"]) == 4
    assert len(tree["edges"]) == 3
    assert sorted(tree["adhesions"]) == sorted([[U, V], [V]])


def test_stats(paper):
    s = tdecomp.stats(paper)
    assert s["minsep_count"] == 3
    assert s["pmc_count"] == 6
    assert s["classification"] == "terminated"

    k5 = tdecomp.gnp(5, 1.0, seed=0)
    s5 = tdecomp.stats(k5)
    assert s5["minsep_count"] == 0
    assert s5["pmc_count"] == 1


def test_gnp_determinism():
    a = tdecomp.gnp(20, 0.5, seed=7)
    b = tdecomp.gnp(20, 0.5, seed=7)
    assert a == b
    assert a.edges() == b.edges()


def test_read_graph(tmp_path, paper):
    path = tmp_path / "paper.gr"
    lines = ["p tw 6 7"] + [f"{u + 1} {v + 1}" for u, v in PAPER_EDGES]
    path.write_text("\n".join(lines) + "\n")
    g = tdecomp.read_graph(str(path))
    assert g.n == 6
    assert g.m == 7


def test_invalid_input():
    with pytest.raises(ValueError):
        tdecomp.Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        tdecomp.optimize(tdecomp.gnp(6, 0.0, seed=1))  # disconnected
