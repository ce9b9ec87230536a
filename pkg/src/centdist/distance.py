"""Centrality distances between graphs.

``approx_distance`` is the plain L1 gap between centrality vectors. The exact
distance is the cheapest route between the two graphs in the metagraph when
every single-edge toggle costs the L1 gap it causes; see :mod:`.metagraph`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

from .centrality import CentralityKind, centrality
from .errors import NotNeighbors, VertexOutsideUniverse
from .graph import Edge, NamedGraph, ged
from . import metagraph as mg

SENSITIVITY_TOL = 1e-12


class DistanceMode(str, enum.Enum):
    EXACT = "exact"
    APPROXIMATE = "approx"


@dataclass(frozen=True)
class DistanceResult:
    value: float
    mode: DistanceMode
    centrality: CentralityKind


def approx_distance(kind: CentralityKind | str, g1: NamedGraph, g2: NamedGraph) -> float:
    """Sum over the union of vertex sets of |C(g1, v) - C(g2, v)|; a vertex
    missing from one graph counts as isolated there (centrality 0)."""
    c1 = centrality(kind, g1)
    c2 = centrality(kind, g2)
    vs = sorted(g1.vertices | g2.vertices)
    return math.fsum(abs(c1.get(v, 0.0) - c2.get(v, 0.0)) for v in vs)


def neighbor_distance(kind: CentralityKind | str, g1: NamedGraph, g2: NamedGraph) -> float:
    d = ged(g1, g2)
    if d != 1:
        raise NotNeighbors(f"graphs are at edit distance {d}, not 1")
    return approx_distance(kind, g1, g2)


def degree_distance(g1: NamedGraph, g2: NamedGraph) -> float:
    return approx_distance(CentralityKind.DEGREE, g1, g2)


def exact_distance(
    kind: CentralityKind | str,
    g1: NamedGraph,
    g2: NamedGraph,
    universe: Iterable[str] | None = None,
    cap: int = mg.DEFAULT_CAP,
) -> float:
    """Weighted shortest-path distance from ``g1`` to ``g2`` in the metagraph
    over ``universe`` (default: the union of both vertex sets).

    Both graphs are padded with isolated vertices up to the universe; the
    search only toggles edges.
    """
    kind = CentralityKind.parse(kind)
    if universe is None:
        universe = g1.vertices | g2.vertices
    universe = frozenset(universe)
    outside = (g1.vertices | g2.vertices) - universe
    if outside:
        raise VertexOutsideUniverse(f"vertices {sorted(outside)} not in universe")
    idx = mg.MetagraphIndex.build(universe, cap=cap)
    if g1 == g2:
        return 0.0
    src = idx.encode(g1.with_vertices(universe))
    dst = idx.encode(g2.with_vertices(universe))
    value, _ = mg.shortest_path(idx, mg.centrality_weight(idx, kind), src, dst)
    return value


def distance(
    kind: CentralityKind | str,
    g1: NamedGraph,
    g2: NamedGraph,
    mode: DistanceMode | str = DistanceMode.APPROXIMATE,
    **kwargs,
) -> DistanceResult:
    kind = CentralityKind.parse(kind)
    mode = DistanceMode(mode)
    if mode is DistanceMode.EXACT:
        value = exact_distance(kind, g1, g2, **kwargs)
    else:
        value = approx_distance(kind, g1, g2)
    return DistanceResult(value, mode, kind)


def is_sensitive(kind: CentralityKind | str, g: NamedGraph) -> tuple[bool, Edge | None]:
    """Check that removing any single edge of ``g`` moves some vertex's value.

    Returns ``(True, None)`` or ``(False, edge)`` with the first offending edge.
    """
    base = centrality(kind, g)
    for e in g.sorted_edges():
        after = centrality(kind, NamedGraph(g.vertices, g.edges - {e}))
        if all(abs(base[v] - after[v]) <= SENSITIVITY_TOL for v in g.vertices):
            return False, e
    return True, None
