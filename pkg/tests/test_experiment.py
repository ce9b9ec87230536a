import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from centdist.errors import EmptyTrace, NonMonotoneTimestamps, NoUsableRecords, TooFewTimesteps
from centdist.experiment import (
    DynamicGraph,
    Event,
    TimestepRecord,
    discretize,
    evaluate_transition,
    rank_cdf,
    rank_of,
    rank_zero_fraction,
    run_experiment,
    triadic_closure_trace,
)
from centdist.graph import NamedGraph, ged, line_graph, shell_graph


def test_rank_counts_strictly_smaller():
    assert rank_of(1.0, [0.5, 1.0, 1.0, 2.0]) == 1
    assert rank_of(0.1, [0.5, 1.0]) == 0
    assert rank_of(3.0, [0.5, 1.0]) == 2


@given(st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=50), st.integers(-10**6, 10**6))
def test_rank_invariant_under_monotone_maps(samples, observed):
    r = rank_of(observed, samples)
    assert rank_of(np.arctan(observed), np.arctan(samples)) == r
    assert rank_of(3 * observed + 7, [3 * s + 7 for s in samples]) == r


def test_identical_snapshots_are_skipped():
    g = line_graph(5)
    dg = DynamicGraph((g, g, shell_graph(5)), g.vertices)
    recs = run_experiment(dg, "closeness", count=20, seed=0)
    assert recs[0].skipped and recs[0].radius == 0
    assert not recs[1].skipped and recs[1].radius == 3


def test_record_fields_are_consistent():
    dg = triadic_closure_trace(n=12, steps=4, seed=2, groups=2, group_size=5)
    for r in run_experiment(dg, "closeness", count=50, seed=1):
        assert len(r.sample_distances) == 50
        assert 0 <= r.rank <= 50
        assert r.rank == sum(d < r.observed_distance for d in r.sample_distances)
        assert np.isclose(r.p50, np.median(r.sample_distances))
        assert r.p5 <= r.p50 <= r.p95


def test_observed_graph_in_samples_only_counts_strictly_smaller():
    g = NamedGraph.from_edges([("a", "b")], "c")
    nxt = NamedGraph.from_edges([("a", "b"), ("a", "c")])
    rec = evaluate_transition(g, nxt, "degree", 300, np.random.default_rng(0))
    assert rec.radius == 1
    # every radius-1 toggle on three vertices moves the degree vector by exactly 2
    assert set(rec.sample_distances) == {2.0}
    assert rec.rank == 0


def test_pipeline_is_deterministic_and_jobs_independent():
    dg = triadic_closure_trace(n=14, steps=6, seed=5, groups=2, group_size=6)
    a = run_experiment(dg, "closeness", count=30, seed=9)
    b = run_experiment(dg, "closeness", count=30, seed=9)
    c = run_experiment(dg, "closeness", count=30, seed=9, jobs=2)
    assert a == b == c


def test_active_only_toggles_active_pairs():
    g1 = NamedGraph.from_edges([("a", "b")], "cdefg")
    g2 = NamedGraph.from_edges([("a", "b"), ("b", "c")], "defg")
    dg = DynamicGraph((g1, g2), g1.vertices)
    rec = run_experiment(dg, "degree", count=40, seed=0, active_only=True)[0]
    # toggles among {a, b, c} only: 3 pairs, each moves degrees by 2
    assert set(rec.sample_distances) == {2.0}


def test_too_few_timesteps():
    with pytest.raises(TooFewTimesteps):
        run_experiment(DynamicGraph((line_graph(3),), line_graph(3).vertices), "degree")


def test_rank_cdf():
    recs = [TimestepRecord(t=i, radius=1, rank=0) for i in range(4)]
    assert rank_cdf(recs) == [(0, 1.0)]
    recs = [TimestepRecord(t=0, radius=1, rank=0), TimestepRecord(t=1, radius=1, rank=5),
            TimestepRecord(t=2, radius=0, skipped=True), TimestepRecord(t=3, radius=1, rank=5)]
    assert rank_cdf(recs) == [(0, pytest.approx(1 / 3)), (5, 1.0)]
    assert rank_zero_fraction(recs) == pytest.approx(1 / 3)
    with pytest.raises(NoUsableRecords):
        rank_cdf([TimestepRecord(t=0, radius=0, skipped=True)])


def test_discretize_single_event():
    dg = discretize([Event("u", "v", 100.0)], window=10)
    assert len(dg) == 1 and dg.timesteps[0].edges == {("u", "v")}


def test_discretize_interaction_and_cumulative():
    events = [Event("a", "b", 0), Event("c", "d", 25), Event("b", "c", 31), Event("a", "b", 45)]
    inter = discretize(events, window=10, mode="interaction")
    assert len(inter) == 5
    assert [sorted(g.edges) for g in inter.timesteps] == [
        [("a", "b")], [], [("c", "d")], [("b", "c")], [("a", "b")]
    ]
    assert all(g.vertices == {"a", "b", "c", "d"} for g in inter.timesteps)
    cum = discretize(events, window=10, mode="cumulative")
    assert cum.timesteps[2].edges == {("a", "b"), ("c", "d")}
    assert cum.timesteps[-1].edges == {("a", "b"), ("b", "c"), ("c", "d")}


def test_discretize_edge_only_in_its_window():
    events = [Event("x", "y", 0), Event("u", "v", 30), Event("x", "y", 49)]
    dg = discretize(events, window=10)
    assert [("u", "v") in g.edges for g in dg.timesteps] == [False, False, False, True, False]


def test_discretize_errors():
    with pytest.raises(EmptyTrace):
        discretize([], 10)
    with pytest.raises(NonMonotoneTimestamps):
        discretize([Event("a", "b", 5), Event("a", "c", 1)], 10)


def test_triadic_trace_properties():
    dg = triadic_closure_trace(seed=4)
    assert len(dg) == 51
    for a, b in zip(dg.timesteps, dg.timesteps[1:]):
        assert a.edges <= b.edges
        assert ged(a, b) <= 1
        for u, x in b.edges - a.edges:
            assert a.adjacency[u] & a.adjacency[x], "new edge must close a triangle"
