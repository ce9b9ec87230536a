"""Named undirected graphs, atomic edit operations and labeled graph edit distance.

Vertices are opaque string identifiers. Two graphs are equal only when their
vertex and edge sets coincide exactly; nothing here works up to isomorphism.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InapplicableEdit, InvalidSize

Edge = tuple[str, str]


def edge_key(u: str, v: str) -> Edge:
    """Canonical (sorted) form of the unordered pair {u, v}."""
    if u == v:
        raise ValueError(f"self-loop on {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class NamedGraph:
    vertices: frozenset[str] = frozenset()
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self):
        vs = frozenset(self.vertices)
        es = frozenset(edge_key(u, v) for u, v in self.edges)
        for v in vs:
            if not isinstance(v, str) or not v:
                raise ValueError(f"vertex identifiers must be non-empty strings, got {v!r}")
        for u, v in es:
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], vertices: Iterable[str] = ()) -> NamedGraph:
        es = [edge_key(u, v) for u, v in edges]
        vs = set(vertices)
        for u, v in es:
            vs.add(u)
            vs.add(v)
        return cls(frozenset(vs), frozenset(es))

    @cached_property
    def adjacency(self) -> Mapping[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def degree(self, v: str) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: str, v: str) -> bool:
        return u != v and edge_key(u, v) in self.edges

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def with_vertices(self, extra: Iterable[str]) -> NamedGraph:
        """Same edges, vertex set enlarged by ``extra`` (as isolated vertices)."""
        return NamedGraph(self.vertices | frozenset(extra), self.edges)

    def remove_vertex(self, v: str) -> NamedGraph:
        """Drop ``v`` together with its incident edges (the G - {i} operation)."""
        if v not in self.vertices:
            raise InapplicableEdit(f"vertex {v!r} not in graph")
        return NamedGraph(
            self.vertices - {v},
            frozenset(e for e in self.edges if v not in e),
        )

    def relabel(self, mapping: Mapping[str, str]) -> NamedGraph:
        return NamedGraph.from_edges(
            ((mapping[u], mapping[v]) for u, v in self.edges),
            (mapping[v] for v in self.vertices),
        )

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"NamedGraph(n={len(self.vertices)}, m={len(self.edges)})"


class EditKind(enum.Enum):
    ADD_EDGE = "add_edge"
    REMOVE_EDGE = "remove_edge"
    ADD_VERTEX = "add_vertex"
    REMOVE_VERTEX = "remove_vertex"


@dataclass(frozen=True)
class EditOp:
    kind: EditKind
    payload: str | Edge = field()

    @classmethod
    def add_edge(cls, u: str, v: str) -> EditOp:
        return cls(EditKind.ADD_EDGE, edge_key(u, v))

    @classmethod
    def remove_edge(cls, u: str, v: str) -> EditOp:
        return cls(EditKind.REMOVE_EDGE, edge_key(u, v))

    @classmethod
    def add_vertex(cls, v: str) -> EditOp:
        return cls(EditKind.ADD_VERTEX, v)

    @classmethod
    def remove_vertex(cls, v: str) -> EditOp:
        return cls(EditKind.REMOVE_VERTEX, v)

    def inverse(self) -> EditOp:
        flip = {
            EditKind.ADD_EDGE: EditKind.REMOVE_EDGE,
            EditKind.REMOVE_EDGE: EditKind.ADD_EDGE,
            EditKind.ADD_VERTEX: EditKind.REMOVE_VERTEX,
            EditKind.REMOVE_VERTEX: EditKind.ADD_VERTEX,
        }
        return EditOp(flip[self.kind], self.payload)


def apply_edit(g: NamedGraph, op: EditOp) -> NamedGraph:
    """Return the graph obtained from ``g`` by one atomic edit.

    Raises :class:`InapplicableEdit` when the edit does not make sense on
    ``g``: adding an existing edge or vertex, removing a missing one, touching
    an unknown endpoint, or removing a vertex that still has incident edges.
    """
    kind, payload = op.kind, op.payload
    if kind in (EditKind.ADD_EDGE, EditKind.REMOVE_EDGE):
        u, v = payload
        if u not in g.vertices or v not in g.vertices:
            raise InapplicableEdit(f"edge {payload} has an endpoint outside the graph")
        present = payload in g.edges
        if kind is EditKind.ADD_EDGE:
            if present:
                raise InapplicableEdit(f"edge {payload} already present")
            return NamedGraph(g.vertices, g.edges | {payload})
        if not present:
            raise InapplicableEdit(f"edge {payload} not present")
        return NamedGraph(g.vertices, g.edges - {payload})

    if kind is EditKind.ADD_VERTEX:
        if payload in g.vertices:
            raise InapplicableEdit(f"vertex {payload!r} already present")
        return NamedGraph(g.vertices | {payload}, g.edges)

    if payload not in g.vertices:
        raise InapplicableEdit(f"vertex {payload!r} not present")
    if g.degree(payload) != 0:
        raise InapplicableEdit(f"vertex {payload!r} still has {g.degree(payload)} incident edges")
    return NamedGraph(g.vertices - {payload}, g.edges)


def apply_edits(g: NamedGraph, ops: Iterable[EditOp]) -> NamedGraph:
    for op in ops:
        g = apply_edit(g, op)
    return g


def ged(g1: NamedGraph, g2: NamedGraph) -> int:
    """Graph edit distance between named graphs under unit-cost vertex and
    edge insertion/deletion.

    For named graphs this is exactly the size of the two symmetric
    differences: every differing vertex or edge needs at least one operation,
    and one operation per element suffices (edges incident to a removed vertex
    already sit in the edge difference).
    """
    return len(g1.vertices ^ g2.vertices) + len(g1.edges ^ g2.edges)


def edit_script(g1: NamedGraph, g2: NamedGraph) -> list[EditOp]:
    """A minimum-length applicable edit sequence turning ``g1`` into ``g2``."""
    ops = [EditOp(EditKind.REMOVE_EDGE, e) for e in sorted(g1.edges - g2.edges)]
    ops += [EditOp(EditKind.REMOVE_VERTEX, v) for v in sorted(g1.vertices - g2.vertices)]
    ops += [EditOp(EditKind.ADD_VERTEX, v) for v in sorted(g2.vertices - g1.vertices)]
    ops += [EditOp(EditKind.ADD_EDGE, e) for e in sorted(g2.edges - g1.edges)]
    return ops


def vertex_names(n: int, prefix: str = "v") -> list[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def line_graph(n: int) -> NamedGraph:
    if n < 2:
        raise InvalidSize(f"line graph needs n >= 2, got {n}")
    vs = vertex_names(n)
    return NamedGraph.from_edges(zip(vs, vs[1:]), vs)


def cycle_graph(n: int) -> NamedGraph:
    if n < 3:
        raise InvalidSize(f"cycle graph needs n >= 3, got {n}")
    g = line_graph(n)
    return NamedGraph(g.vertices, g.edges | {edge_key("v1", f"v{n}")})


def shell_graph(n: int) -> NamedGraph:
    """Line v1..vn with the hub v1 additionally joined to every v3..vn."""
    if n < 2:
        raise InvalidSize(f"shell graph needs n >= 2, got {n}")
    g = line_graph(n)
    spokes = {edge_key("v1", f"v{i}") for i in range(3, n + 1)}
    return NamedGraph(g.vertices, g.edges | spokes)


def complete_graph(n: int) -> NamedGraph:
    vs = vertex_names(n)
    return NamedGraph.from_edges(
        ((vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)), vs
    )


def empty_graph(n: int) -> NamedGraph:
    return NamedGraph(frozenset(vertex_names(n)))
