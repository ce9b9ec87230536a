"""Degree, betweenness and closeness centralities over named graphs.

Conventions that differ from textbook definitions:

* betweenness counts every unordered pair {x, w} once, a vertex lies on its
  own shortest paths (an endpoint scores 1 for every vertex it can reach),
  and disconnected pairs contribute nothing;
* closeness is ``sum(2 ** -d(v, w))`` over the other vertices, unreachable
  ones contributing 0.

Isolated vertices score 0 under all three.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from functools import lru_cache

from .graph import NamedGraph

CentralityVector = dict[str, float]


class CentralityKind(str, enum.Enum):
    DEGREE = "degree"
    BETWEENNESS = "betweenness"
    CLOSENESS = "closeness"

    @classmethod
    def parse(cls, name: str | CentralityKind) -> CentralityKind:
        if isinstance(name, cls):
            return name
        return cls(str(name).lower())


def bfs_distances(g: NamedGraph, source: str) -> dict[str, int]:
    """Hop distances from ``source`` to every vertex reachable from it."""
    adj = g.adjacency
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if w not in dist:
                dist[w] = du
                queue.append(w)
    return dist


def _degree(g: NamedGraph) -> CentralityVector:
    return {v: float(len(ns)) for v, ns in g.adjacency.items()}


def _closeness(g: NamedGraph) -> CentralityVector:
    out = {}
    for v in g.vertices:
        counts: dict[int, int] = {}
        for d in bfs_distances(g, v).values():
            if d:
                counts[d] = counts.get(d, 0) + 1
        # every term is dyadic; summing by increasing distance keeps the sum exact
        # as long as the distance span stays under the 53-bit mantissa
        out[v] = math.fsum(math.ldexp(c, -d) for d, c in sorted(counts.items()))
    return out


def _betweenness(g: NamedGraph) -> CentralityVector:
    adj = g.adjacency
    interior = dict.fromkeys(g.vertices, 0.0)
    reach = dict.fromkeys(g.vertices, 0)
    for s in sorted(g.vertices):
        order = []
        preds: dict[str, list[str]] = {s: []}
        sigma = {s: 1}
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    sigma[w] = 0
                    preds[w] = []
                    queue.append(w)
                if dist[w] == dist[u] + 1:
                    sigma[w] += sigma[u]
                    preds[w].append(u)
        reach[s] = len(order) - 1
        delta = dict.fromkeys(order, 0.0)
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for u in preds[w]:
                delta[u] += sigma[u] * coeff
            if w != s:
                interior[w] += delta[w]
    # ordered sources visit each unordered pair twice
    return {v: interior[v] / 2.0 + reach[v] for v in g.vertices}


_DISPATCH = {
    CentralityKind.DEGREE: _degree,
    CentralityKind.BETWEENNESS: _betweenness,
    CentralityKind.CLOSENESS: _closeness,
}


@lru_cache(maxsize=65536)
def _cached(kind: CentralityKind, g: NamedGraph) -> tuple[tuple[str, float], ...]:
    return tuple(sorted(_DISPATCH[kind](g).items()))


def centrality(kind: CentralityKind | str, g: NamedGraph) -> CentralityVector:
    """Centrality vector of ``g`` for ``kind``; a fresh dict on every call."""
    return dict(_cached(CentralityKind.parse(kind), g))


def degree_centrality(g: NamedGraph) -> CentralityVector:
    return centrality(CentralityKind.DEGREE, g)


def betweenness_centrality(g: NamedGraph) -> CentralityVector:
    return centrality(CentralityKind.BETWEENNESS, g)


def closeness_centrality(g: NamedGraph) -> CentralityVector:
    return centrality(CentralityKind.CLOSENESS, g)


def clear_cache() -> None:
    _cached.cache_clear()
