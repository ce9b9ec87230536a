"""Observed-successor versus same-radius random successors.

For every consecutive pair of snapshots (G_t, G_t+1) we draw ``count``
graphs at the same edit distance from G_t and rank the observed successor's
centrality distance among the samples' distances. Rank 0 means no random
sample was strictly closer.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .centrality import CentralityKind
from .distance import approx_distance
from .errors import EmptyTrace, NonMonotoneTimestamps, NoUsableRecords, TooFewTimesteps
from .graph import NamedGraph, edge_key, ged, vertex_names
from .sampler import sample_graphs

log = logging.getLogger(__name__)

DEFAULT_COUNT = 200
PERCENTILES = (5, 50, 95)


@dataclass(frozen=True)
class Event:
    u: str
    v: str
    timestamp: float


@dataclass(frozen=True)
class DynamicGraph:
    timesteps: tuple[NamedGraph, ...]
    universe: frozenset[str]
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "timesteps", tuple(self.timesteps))
        object.__setattr__(self, "universe", frozenset(self.universe))
        if not self.timesteps:
            raise ValueError("a dynamic graph needs at least one snapshot")
        for g in self.timesteps:
            if not g.vertices <= self.universe:
                raise ValueError("snapshot uses vertices outside the declared universe")

    @classmethod
    def from_snapshots(cls, snapshots: Iterable[NamedGraph], **metadata) -> DynamicGraph:
        snaps = list(snapshots)
        universe = frozenset().union(*(g.vertices for g in snaps)) if snaps else frozenset()
        return cls(tuple(g.with_vertices(universe) for g in snaps), universe, metadata)

    def __len__(self) -> int:
        return len(self.timesteps)


@dataclass(frozen=True)
class TimestepRecord:
    t: int
    radius: int
    observed_distance: float = float("nan")
    sample_distances: tuple[float, ...] = ()
    rank: int = -1
    p5: float = float("nan")
    p50: float = float("nan")
    p95: float = float("nan")
    skipped: bool = False


def rank_of(observed: float, samples: Sequence[float]) -> int:
    """How many samples are strictly smaller than ``observed``."""
    return int(np.count_nonzero(np.asarray(samples) < observed))


def evaluate_transition(
    g_t: NamedGraph,
    g_next: NamedGraph,
    kind: CentralityKind | str,
    count: int,
    rng: np.random.Generator,
    t: int = 0,
    vertices: Iterable[str] | None = None,
) -> TimestepRecord:
    kind = CentralityKind.parse(kind)
    radius = ged(g_t, g_next)
    if radius == 0:
        return TimestepRecord(t=t, radius=0, skipped=True)
    samples = sample_graphs(g_t, radius, count, rng, vertices=vertices)
    for s in samples:
        if ged(g_t, s) != radius:
            raise AssertionError(f"sample at t={t} is not at edit distance {radius}")
    observed = approx_distance(kind, g_t, g_next)
    dists = tuple(approx_distance(kind, g_t, s) for s in samples)
    p5, p50, p95 = np.percentile(dists, PERCENTILES)
    return TimestepRecord(
        t=t,
        radius=radius,
        observed_distance=observed,
        sample_distances=dists,
        rank=rank_of(observed, dists),
        p5=float(p5),
        p50=float(p50),
        p95=float(p95),
    )


def _active_vertices(g_t: NamedGraph, g_next: NamedGraph) -> set[str]:
    return {v for e in g_t.edges | g_next.edges for v in e}


def _transition_job(args) -> TimestepRecord:
    g_t, g_next, kind, count, seed, t, active = args
    rng = np.random.default_rng([seed, t])
    vertices = _active_vertices(g_t, g_next) if active else None
    return evaluate_transition(g_t, g_next, kind, count, rng, t=t, vertices=vertices)


def run_experiment(
    dg: DynamicGraph,
    kind: CentralityKind | str,
    count: int = DEFAULT_COUNT,
    seed: int = 0,
    active_only: bool = False,
    jobs: int = 1,
) -> list[TimestepRecord]:
    """One record per transition t -> t+1, sorted by t.

    Each transition draws from its own generator seeded with ``(seed, t)``,
    so results do not depend on ``jobs``. With ``active_only`` the null model
    toggles only pairs among vertices incident to an edge of G_t or G_t+1.
    """
    if len(dg.timesteps) < 2:
        raise TooFewTimesteps("need at least two snapshots")
    if count < 1:
        raise ValueError("count must be >= 1")
    kind = CentralityKind.parse(kind)
    snaps = dg.timesteps
    tasks = [(snaps[t], snaps[t + 1], kind, count, seed, t, active_only) for t in range(len(snaps) - 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_transition_job, tasks))
    else:
        records = [_transition_job(task) for task in tasks]
    skipped = sum(r.skipped for r in records)
    log.info("%d transitions, %d skipped (zero radius)", len(records), skipped)
    return sorted(records, key=lambda r: r.t)


def rank_cdf(records: Iterable[TimestepRecord]) -> list[tuple[int, float]]:
    ranks = np.array([r.rank for r in records if not r.skipped])
    if ranks.size == 0:
        raise NoUsableRecords("no non-skipped records")
    values, counts = np.unique(ranks, return_counts=True)
    fractions = np.cumsum(counts) / ranks.size
    return [(int(v), float(f)) for v, f in zip(values, fractions)]


def rank_zero_fraction(records: Iterable[TimestepRecord]) -> float:
    usable = [r for r in records if not r.skipped]
    if not usable:
        raise NoUsableRecords("no non-skipped records")
    return sum(r.rank == 0 for r in usable) / len(usable)


def discretize(events: Sequence[Event], window: float, mode: str = "interaction") -> DynamicGraph:
    """Bin timestamped events into snapshots of width ``window``.

    ``interaction``: snapshot t holds the edges seen inside window t.
    ``cumulative``: snapshot t holds every edge seen up to the end of window t.
    Every snapshot carries the full set of identifiers seen in the trace.
    Windows are anchored at the first timestamp.
    """
    if not events:
        raise EmptyTrace("no events")
    if window <= 0:
        raise ValueError("window must be positive")
    if mode not in ("interaction", "cumulative"):
        raise ValueError(f"unknown mode {mode!r}")
    for a, b in zip(events, events[1:]):
        if b.timestamp < a.timestamp:
            raise NonMonotoneTimestamps(f"timestamp {b.timestamp} follows {a.timestamp}")
    t0 = events[0].timestamp
    n_windows = int((events[-1].timestamp - t0) // window) + 1
    buckets: list[set] = [set() for _ in range(n_windows)]
    universe = set()
    for ev in events:
        universe.update((ev.u, ev.v))
        if ev.u != ev.v:
            buckets[int((ev.timestamp - t0) // window)].add(edge_key(ev.u, ev.v))
    universe = frozenset(universe)
    snaps = []
    acc: set = set()
    for bucket in buckets:
        if mode == "cumulative":
            acc |= bucket
            edges = frozenset(acc)
        else:
            edges = frozenset(bucket)
        snaps.append(NamedGraph(universe, edges))
    return DynamicGraph(tuple(snaps), universe, {"window": window, "mode": mode, "t0": t0})


def triadic_closure_trace(
    n: int = 30,
    steps: int = 50,
    seed: int = 0,
    groups: int = 2,
    group_size: int = 9,
    max_new_edges: int = 1,
) -> DynamicGraph:
    """Synthetic evolution driven by triadic closure.

    The first ``groups * group_size`` vertices form groups, each a star around
    its first member (a host); the remaining vertices start unattached. Every
    step adds 1..``max_new_edges`` edges, each closing an open triangle
    u - w - x by linking u and x; a step with no open triangle left adds
    nothing. Yields ``steps + 1`` snapshots.
    """
    if groups * group_size > n:
        raise ValueError("groups do not fit in n vertices")
    rng = np.random.default_rng(seed)
    vs = vertex_names(n)
    edges = set()
    for k in range(groups):
        members = vs[k * group_size:(k + 1) * group_size]
        edges.update(edge_key(members[0], m) for m in members[1:])
    g = NamedGraph(frozenset(vs), frozenset(edges))
    snaps = [g]
    for _ in range(steps):
        edges = set(g.edges)
        adj = {v: set(ns) for v, ns in g.adjacency.items()}
        for _ in range(int(rng.integers(1, max_new_edges + 1))):
            for _attempt in range(200):
                u = vs[int(rng.integers(n))]
                if not adj[u]:
                    continue
                w = sorted(adj[u])[int(rng.integers(len(adj[u])))]
                options = sorted(x for x in adj[w] if x != u and x not in adj[u])
                if not options:
                    continue
                x = options[int(rng.integers(len(options)))]
                edges.add(edge_key(u, x))
                adj[u].add(x)
                adj[x].add(u)
                break
        g = NamedGraph(g.vertices, frozenset(edges))
        snaps.append(g)
    meta = {"source": "triadic_closure", "seed": seed, "groups": groups, "group_size": group_size}
    return DynamicGraph(tuple(snaps), frozenset(vs), meta)
