"""Evolutionary paths between graphs and their per-step distance profiles."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .centrality import CentralityKind
from .distance import approx_distance, neighbor_distance
from .errors import InvalidSize, NotNested
from .graph import EditKind, EditOp, NamedGraph, apply_edit, line_graph


@dataclass(frozen=True)
class EvolutionPath:
    start: NamedGraph
    edits: tuple[EditOp, ...]
    snapshots: tuple[NamedGraph, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edits", tuple(self.edits))
        snaps = [self.start]
        for op in self.edits:
            snaps.append(apply_edit(snaps[-1], op))
        object.__setattr__(self, "snapshots", tuple(snaps))

    @property
    def end(self) -> NamedGraph:
        return self.snapshots[-1]

    def __len__(self) -> int:
        return len(self.edits)

    @property
    def is_topological(self) -> bool:
        return all(op.kind is EditKind.ADD_EDGE for op in self.edits)


@dataclass(frozen=True)
class DistanceProfile:
    steps: tuple[float, ...]
    centrality: CentralityKind

    @property
    def cumulative(self) -> float:
        return math.fsum(self.steps)


def _check_size(n: int) -> None:
    if n < 3:
        raise InvalidSize(f"line-to-shell paths need n >= 3, got {n}")


def incremental_order(n: int) -> list[int]:
    _check_size(n)
    return list(range(3, n + 1))


def dichotomic_order(n: int) -> list[int]:
    """Hub targets for the dichotomic path: v_n first, then the midpoints of
    [1, n] refined breadth-first, right half before left half, with floor
    division. For n = 2^k this is n, n/2, 3n/4, n/4, 7n/8, 5n/8, 3n/8, n/8, ...
    1 and 2 are never targets (2 still splits its interval)."""
    _check_size(n)
    order = [n]
    queue = deque([(1, n)])
    while queue:
        lo, hi = queue.popleft()
        if hi - lo < 2:
            continue
        mid = (lo + hi) // 2
        if mid >= 3:
            order.append(mid)
        queue.append((mid, hi))
        queue.append((lo, mid))
    return order


def _hub_path(n: int, targets: list[int]) -> EvolutionPath:
    return EvolutionPath(line_graph(n), tuple(EditOp.add_edge("v1", f"v{j}") for j in targets))


def incremental_path(n: int) -> EvolutionPath:
    return _hub_path(n, incremental_order(n))


def dichotomic_path(n: int) -> EvolutionPath:
    return _hub_path(n, dichotomic_order(n))


def profile(path: EvolutionPath, kind: CentralityKind | str) -> DistanceProfile:
    kind = CentralityKind.parse(kind)
    snaps = path.snapshots
    steps = tuple(neighbor_distance(kind, a, b) for a, b in zip(snaps, snaps[1:]))
    return DistanceProfile(steps, kind)


def greedy_path(kind: CentralityKind | str, g1: NamedGraph, g2: NamedGraph) -> EvolutionPath:
    """Add missing edges one at a time, each time picking the one that brings
    the graph closest (approximate distance) to ``g2``; ties go to the
    lexicographically smallest edge."""
    kind = CentralityKind.parse(kind)
    if g1.vertices != g2.vertices or not g1.edges <= g2.edges:
        raise NotNested("greedy evolution needs E(g1) within E(g2) on a shared vertex set")
    current = g1
    edits = []
    missing = sorted(g2.edges - g1.edges)
    while missing:
        best = min(
            missing,
            key=lambda e: (approx_distance(kind, NamedGraph(current.vertices, current.edges | {e}), g2), e),
        )
        op = EditOp.add_edge(*best)
        edits.append(op)
        current = apply_edit(current, op)
        missing.remove(best)
    return EvolutionPath(g1, tuple(edits))


def random_topological_path(g1: NamedGraph, g2: NamedGraph, rng) -> EvolutionPath:
    """Edge additions from ``g1`` to ``g2`` in an order drawn from ``rng``
    (anything with a numpy-style ``permutation``)."""
    if g1.vertices != g2.vertices or not g1.edges <= g2.edges:
        raise NotNested("topological path needs E(g1) within E(g2) on a shared vertex set")
    missing = sorted(g2.edges - g1.edges)
    order = rng.permutation(len(missing))
    return EvolutionPath(g1, tuple(EditOp.add_edge(*missing[i]) for i in order))


def edge_label(op: EditOp) -> str:
    u, v = op.payload
    return f"{u} {v}"

