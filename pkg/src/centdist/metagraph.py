"""The metagraph MG_k: all labeled graphs on a fixed k-vertex universe, joined
when they differ by a single edge.

Nodes are never materialized as graphs unless asked: a node is an integer
bitmask over a fixed lexicographic enumeration of the C(k, 2) vertex pairs.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator

import numpy as np

from .centrality import CentralityKind, centrality
from .errors import NonPositiveWeight, UniverseTooLarge, VertexMismatch
from .graph import Edge, NamedGraph, ged, vertex_names

DEFAULT_CAP = 5
POSITIVITY_TOL = 1e-12

WeightFn = Callable[[int, int], float]


@dataclass(frozen=True)
class MetagraphIndex:
    universe: tuple[str, ...]
    pair_order: tuple[Edge, ...]

    @classmethod
    def build(cls, universe: Iterable[str], cap: int = DEFAULT_CAP) -> MetagraphIndex:
        vs = tuple(sorted(set(universe)))
        if len(vs) > cap:
            raise UniverseTooLarge(
                f"universe of {len(vs)} vertices exceeds cap {cap} "
                f"(metagraph would have 2^{math.comb(len(vs), 2)} nodes)"
            )
        return cls(vs, tuple(combinations(vs, 2)))

    @classmethod
    def of_size(cls, k: int, cap: int = DEFAULT_CAP) -> MetagraphIndex:
        return cls.build(vertex_names(k), cap=cap)

    @property
    def k(self) -> int:
        return len(self.universe)

    @property
    def n_pairs(self) -> int:
        return len(self.pair_order)

    @property
    def size(self) -> int:
        return 1 << self.n_pairs

    def nodes(self) -> range:
        return range(self.size)

    def encode(self, g: NamedGraph) -> int:
        if g.vertices != frozenset(self.universe):
            raise VertexMismatch("graph vertex set differs from the metagraph universe")
        mask = 0
        for i, e in enumerate(self.pair_order):
            if e in g.edges:
                mask |= 1 << i
        return mask

    def decode(self, mask: int) -> NamedGraph:
        if not 0 <= mask < self.size:
            raise ValueError(f"mask {mask} outside [0, {self.size})")
        edges = [e for i, e in enumerate(self.pair_order) if mask >> i & 1]
        return NamedGraph(frozenset(self.universe), frozenset(edges))

    def neighbors(self, mask: int) -> list[int]:
        return [mask ^ (1 << i) for i in range(self.n_pairs)]

    def graphs(self) -> Iterator[NamedGraph]:
        for m in self.nodes():
            yield self.decode(m)


def check_bipartite(idx: MetagraphIndex) -> bool:
    """Two-colour MG_k by breadth-first search and confirm the colouring is the
    edge-count parity: every toggle joins an even graph to an odd one."""
    colour = np.full(idx.size, -1, dtype=np.int8)
    for root in idx.nodes():
        if colour[root] >= 0:
            continue
        colour[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for m in frontier:
                for w in idx.neighbors(m):
                    if colour[w] < 0:
                        colour[w] = 1 - colour[m]
                        nxt.append(w)
                    elif colour[w] == colour[m]:
                        return False
            frontier = nxt
    parity = np.array([m.bit_count() & 1 for m in idx.nodes()], dtype=np.int8)
    return bool(np.all(parity == colour) or np.all(parity != colour))


def parity_classes(idx: MetagraphIndex) -> tuple[int, int]:
    even = sum(1 for m in idx.nodes() if m.bit_count() % 2 == 0)
    return even, idx.size - even


def layer_edge_count(k: int, cap: int = DEFAULT_CAP) -> int:
    """Number of metagraph edges between MG_k and MG_{k+1}.

    Built explicitly: every graph on v1..vk gains the isolated vertex v{k+1};
    each padded graph must be a distinct MG_{k+1} node at edit distance 1.
    """
    if k > cap:
        raise UniverseTooLarge(f"k={k} exceeds cap {cap}")
    if k < 0:
        raise ValueError("k must be non-negative")
    small = MetagraphIndex.of_size(k, cap=cap)
    new_vertex = f"v{k + 1}"
    seen = set()
    for g in small.graphs():
        padded = g.with_vertices([new_vertex])
        assert ged(g, padded) == 1
        seen.add(padded)
    return len(seen)


def cross_layer_edge_count(k: int, ell: int) -> int:
    """c(k, l) for graphs on the nested universes v1..vk and v1..vl.

    One edit changes the vertex count by at most one, so layers further than
    one apart share no metagraph edge.
    """
    if abs(k - ell) > 1:
        return 0
    if k == ell:
        return math.comb(k, 2) * (1 << math.comb(k, 2)) // 2
    return layer_edge_count(min(k, ell), cap=max(k, ell))


def shortest_path(idx: MetagraphIndex, weight: WeightFn, src: int, dst: int) -> tuple[float, list[int]]:
    """Dijkstra from ``src`` to ``dst`` over the implicit metagraph."""
    if src == dst:
        return 0.0, [src]
    dist = {src: 0.0}
    prev: dict[int, int] = {}
    done = set()
    heap = [(0.0, src)]
    while heap:
        d, m = heapq.heappop(heap)
        if m in done:
            continue
        done.add(m)
        if m == dst:
            break
        for w in idx.neighbors(m):
            if w in done:
                continue
            c = weight(m, w)
            if not c > POSITIVITY_TOL:
                raise NonPositiveWeight(f"edge {m}->{w} has weight {c}")
            nd = d + c
            if nd < dist.get(w, math.inf):
                dist[w] = nd
                prev[w] = m
                heapq.heappush(heap, (nd, w))
    path = [dst]
    while path[-1] != src:
        path.append(prev[path[-1]])
    path.reverse()
    return dist[dst], path


def single_source(idx: MetagraphIndex, weight: WeightFn, src: int) -> np.ndarray:
    """Distances from ``src`` to every node, as an array indexed by mask."""
    out = np.full(idx.size, math.inf)
    out[src] = 0.0
    done = np.zeros(idx.size, dtype=bool)
    heap = [(0.0, src)]
    while heap:
        d, m = heapq.heappop(heap)
        if done[m]:
            continue
        done[m] = True
        for w in idx.neighbors(m):
            if done[w]:
                continue
            c = weight(m, w)
            if not c > POSITIVITY_TOL:
                raise NonPositiveWeight(f"edge {m}->{w} has weight {c}")
            if d + c < out[w]:
                out[w] = d + c
                heapq.heappush(heap, (d + c, w))
    return out


def all_pairs(idx: MetagraphIndex, weight: WeightFn) -> np.ndarray:
    return np.vstack([single_source(idx, weight, s) for s in idx.nodes()])


def unit_weight(a: int, b: int) -> float:
    return 1.0


def centrality_weight(idx: MetagraphIndex, kind: CentralityKind | str) -> WeightFn:
    """Edge weight = L1 change of the centrality vector across one toggle.

    Vectors are memoized per mask for the lifetime of the returned function.
    """
    kind = CentralityKind.parse(kind)
    vectors: dict[int, np.ndarray] = {}

    def vec(m: int) -> np.ndarray:
        v = vectors.get(m)
        if v is None:
            c = centrality(kind, idx.decode(m))
            v = vectors[m] = np.array([c[u] for u in idx.universe])
        return v

    def weight(a: int, b: int) -> float:
        return math.fsum(np.abs(vec(a) - vec(b)))

    return weight
