"""Null model: graphs at an exact edit distance from a reference graph.

A sample toggles a uniformly random ``radius``-subset of the vertex pairs of
the reference's (fixed) vertex set. Distinct toggle sets give distinct
graphs, so this is also uniform over the edit-distance sphere restricted to
edge edits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import EmptyVertexSet, RadiusTooLarge
from .graph import Edge, NamedGraph, ged


@dataclass(frozen=True)
class SampleSet:
    reference: NamedGraph
    radius: int
    samples: tuple[NamedGraph, ...]
    seed: int
    with_replacement: bool = True

    def __len__(self) -> int:
        return len(self.samples)


def partial_shuffle(n: int, k: int, rng: np.random.Generator) -> list[int]:
    """First ``k`` entries of a Fisher-Yates shuffle of ``range(n)``."""
    pool = list(range(n))
    for i in range(k):
        j = int(rng.integers(i, n))
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:k]


def toggle(g: NamedGraph, pairs: Iterable[Edge]) -> NamedGraph:
    return NamedGraph(g.vertices, g.edges.symmetric_difference(pairs))


def sample_graphs(
    g: NamedGraph,
    radius: int,
    count: int,
    rng: np.random.Generator,
    vertices: Iterable[str] | None = None,
) -> list[NamedGraph]:
    """``count`` graphs at edit distance ``radius`` from ``g``, drawn from ``rng``.

    ``vertices`` restricts the toggled pairs to a subset of ``g``'s vertices.
    """
    pool = sorted(g.vertices if vertices is None else set(vertices) & g.vertices)
    if not pool:
        raise EmptyVertexSet("no vertices to sample pairs from")
    pairs = list(combinations(pool, 2))
    if radius < 0 or radius > len(pairs):
        raise RadiusTooLarge(f"radius {radius} not in [0, {len(pairs)}] for {len(pool)} vertices")
    if count < 1:
        raise ValueError("count must be >= 1")
    out = []
    for _ in range(count):
        chosen = partial_shuffle(len(pairs), radius, rng)
        out.append(toggle(g, (pairs[i] for i in chosen)))
    return out


def sample_at_radius(
    g: NamedGraph,
    radius: int,
    count: int,
    seed: int,
    vertices: Iterable[str] | None = None,
) -> SampleSet:
    rng = np.random.default_rng(seed)
    samples = sample_graphs(g, radius, count, rng, vertices=vertices)
    return SampleSet(g, radius, tuple(samples), seed)


def verify(sample_set: SampleSet) -> bool:
    return all(ged(sample_set.reference, s) == sample_set.radius for s in sample_set.samples)


def sphere_size(g: NamedGraph, radius: int) -> int:
    """Number of distinct edge-toggle outcomes at ``radius``."""
    return math.comb(math.comb(len(g.vertices), 2), radius)
