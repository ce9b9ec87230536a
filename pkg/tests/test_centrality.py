import math
import random
from pathlib import Path

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from centdist.centrality import (
    CentralityKind,
    betweenness_centrality,
    centrality,
    closeness_centrality,
    degree_centrality,
)
from centdist.graph import NamedGraph, complete_graph, empty_graph, line_graph

from conftest import named_graphs
from oracles import brute_betweenness, exact_closeness

GOLDEN = Path(__file__).parent / "data"


def test_degree_examples():
    assert degree_centrality(line_graph(5)) == {"v1": 1, "v2": 2, "v3": 2, "v4": 2, "v5": 1}
    assert set(degree_centrality(complete_graph(4)).values()) == {3}
    assert degree_centrality(NamedGraph(frozenset({"x"}))) == {"x": 0}


def test_closeness_small_paths():
    assert closeness_centrality(line_graph(2)) == {"v1": 0.5, "v2": 0.5}
    assert closeness_centrality(line_graph(3)) == {"v1": 0.75, "v2": 1.0, "v3": 0.75}


def test_closeness_ignores_unreachable():
    g = NamedGraph.from_edges([("a", "b"), ("c", "d"), ("d", "e")])
    cc = closeness_centrality(g)
    assert cc["a"] == 0.5
    assert cc["d"] == 1.0
    assert closeness_centrality(empty_graph(3)) == {"v1": 0, "v2": 0, "v3": 0}


def test_closeness_line40_matches_golden():
    rows = (GOLDEN / "cc_line_n40.csv").read_text().splitlines()[1:]
    cc = closeness_centrality(line_graph(40))
    for row in rows:
        v, value = row.split(",")
        assert f"{cc[v]:.12g}" == value


def test_betweenness_examples():
    assert betweenness_centrality(line_graph(3)) == {"v1": 2, "v2": 3, "v3": 2}
    for n in range(2, 7):
        assert set(betweenness_centrality(complete_graph(n)).values()) == {n - 1}
    assert betweenness_centrality(NamedGraph.from_edges([("a", "b")], ["z"]))["z"] == 0


@settings(max_examples=150, deadline=None)
@given(named_graphs(max_n=7))
def test_betweenness_matches_path_enumeration(g):
    fast = betweenness_centrality(g)
    slow = brute_betweenness(g)
    for v in g.vertices:
        assert fast[v] == pytest.approx(float(slow[v]), abs=1e-9)


@given(named_graphs(max_n=8))
def test_closeness_matches_exact_fractions(g):
    fast = closeness_centrality(g)
    slow = exact_closeness(g)
    for v in g.vertices:
        assert fast[v] == float(slow[v])


@pytest.mark.parametrize("kind", list(CentralityKind))
@given(g=named_graphs(max_n=7), seed=st.integers(0, 2**32 - 1))
def test_anonymity(kind, g, seed):
    vs = g.sorted_vertices()
    shuffled = vs[:]
    random.Random(seed).shuffle(shuffled)
    pi = dict(zip(vs, shuffled))
    before = centrality(kind, g)
    after = centrality(kind, g.relabel(pi))
    for v in vs:
        assert after[pi[v]] == pytest.approx(before[v], abs=1e-9)


@pytest.mark.parametrize("kind", list(CentralityKind))
@given(g=named_graphs(max_n=7))
def test_vector_domain_and_sign(kind, g):
    c = centrality(kind, g)
    assert set(c) == g.vertices
    assert all(x >= 0 for x in c.values())
    for v in g.vertices:
        if g.degree(v) == 0:
            assert c[v] == 0


@given(named_graphs(min_n=2, max_n=7), st.data())
def test_closeness_never_drops_when_adding_an_edge(g, data):
    missing = [(u, v) for u in g.sorted_vertices() for v in g.sorted_vertices() if u < v and not g.has_edge(u, v)]
    if not missing:
        return
    e = data.draw(st.sampled_from(missing))
    before = closeness_centrality(g)
    after = closeness_centrality(NamedGraph(g.vertices, g.edges | {e}))
    assert all(after[v] >= before[v] for v in g.vertices)
    assert after[e[0]] > before[e[0]] and after[e[1]] > before[e[1]]


@given(named_graphs(min_n=2, max_n=7), st.data())
def test_degree_edge_locality(g, data):
    missing = [(u, v) for u in g.sorted_vertices() for v in g.sorted_vertices() if u < v and not g.has_edge(u, v)]
    if not missing:
        return
    u, v = data.draw(st.sampled_from(missing))
    before = degree_centrality(g)
    after = degree_centrality(NamedGraph(g.vertices, g.edges | {(u, v)}))
    changed = {w for w in g.vertices if after[w] != before[w]}
    assert changed == {u, v}
    assert after[u] - before[u] == 1 and after[v] - before[v] == 1


def test_dispatch_and_parse():
    assert centrality("degree", line_graph(5)) == degree_centrality(line_graph(5))
    assert CentralityKind.parse("Closeness") is CentralityKind.CLOSENESS
    with pytest.raises(ValueError):
        CentralityKind.parse("pagerank")


def test_returned_vectors_are_independent_copies():
    g = line_graph(4)
    c = closeness_centrality(g)
    c["v1"] = 99.0
    assert closeness_centrality(g)["v1"] == 0.875


def test_closeness_deep_path_is_dyadic_exact():
    cc = closeness_centrality(line_graph(60))
    assert cc["v1"] == math.fsum(2.0 ** -d for d in range(1, 60))
