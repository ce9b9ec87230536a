"""Text formats: edge lists, event traces and the CSV/JSON outputs.

Edge list grammar, one item per line::

    # comment (also allowed after an item)
    u v        an edge between u and v
    u          a vertex, possibly isolated

Event traces carry one ``u v timestamp`` triple per line. All numbers are
written with 12 significant digits so outputs are byte-stable.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import DuplicateEdge, EmptyTrace, NonMonotoneTimestamps, ParseError, SelfLoop
from .experiment import Event, TimestepRecord
from .graph import NamedGraph, edge_key

log = logging.getLogger(__name__)


def fmt(x: float) -> str:
    return f"{x:.12g}"


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_edge_list(text: str) -> NamedGraph:
    vertices: set[str] = set()
    edges: set = set()
    for lineno, parts in _tokens(text):
        if len(parts) == 1:
            vertices.add(parts[0])
        elif len(parts) == 2:
            u, v = parts
            if u == v:
                raise SelfLoop(lineno, f"self-loop on {u!r}")
            e = edge_key(u, v)
            if e in edges:
                raise DuplicateEdge(lineno, f"duplicate edge {u} {v}")
            edges.add(e)
            vertices.update(e)
        else:
            raise ParseError(lineno, f"expected 1 or 2 fields, got {len(parts)}")
    return NamedGraph(frozenset(vertices), frozenset(edges))


def serialize_edge_list(g: NamedGraph) -> str:
    lines = []
    isolated = [v for v in g.sorted_vertices() if g.degree(v) == 0]
    lines.extend(isolated)
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "".join(line + "\n" for line in lines)


def read_edge_list(path: str | Path) -> NamedGraph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: NamedGraph, path: str | Path) -> None:
    Path(path).write_text(serialize_edge_list(g))


def parse_events(text: str, sort: bool = False) -> list[Event]:
    """Parse a ``u v timestamp`` trace.

    Out-of-order timestamps raise :class:`NonMonotoneTimestamps` unless
    ``sort`` is set, in which case they are logged and the trace is sorted
    (stable, so equal timestamps keep file order).
    """
    events = []
    for lineno, parts in _tokens(text):
        if len(parts) != 3:
            raise ParseError(lineno, f"expected 'u v timestamp', got {len(parts)} fields")
        u, v, ts = parts
        try:
            stamp = float(ts)
        except ValueError:
            raise ParseError(lineno, f"bad timestamp {ts!r}") from None
        events.append(Event(u, v, stamp))
    if not events:
        raise EmptyTrace("trace has no events")
    disorder = sum(b.timestamp < a.timestamp for a, b in zip(events, events[1:]))
    if disorder:
        if not sort:
            raise NonMonotoneTimestamps(f"{disorder} out-of-order timestamps (use sorting to accept)")
        log.warning("sorting trace: %d out-of-order timestamps", disorder)
        events.sort(key=lambda e: e.timestamp)
    return events


def read_events(path: str | Path, sort: bool = False) -> list[Event]:
    return parse_events(Path(path).read_text(), sort=sort)


def _csv_text(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def centrality_csv(vector: Mapping[str, float]) -> str:
    return _csv_text(["vertex", "value"], ((v, fmt(vector[v])) for v in sorted(vector)))


def profile_csv(edges: Sequence[str], values: Sequence[float]) -> str:
    return _csv_text(["step", "edge", "dC"], ((i + 1, e, fmt(x)) for i, (e, x) in enumerate(zip(edges, values))))


def parse_profile_csv(text: str) -> list[tuple[int, str, str]]:
    rows = list(csv.reader(io.StringIO(text)))
    return [(int(r[0]), r[1], r[2]) for r in rows[1:]]


RECORDS_HEADER = ["t", "radius", "observed_dC", "rank", "p5", "p50", "p95", "skipped"]


def records_csv(records: Iterable[TimestepRecord]) -> str:
    def row(r: TimestepRecord):
        if r.skipped:
            return [r.t, r.radius, "", "", "", "", "", 1]
        return [r.t, r.radius, fmt(r.observed_distance), r.rank, fmt(r.p5), fmt(r.p50), fmt(r.p95), 0]

    return _csv_text(RECORDS_HEADER, (row(r) for r in records))


def cdf_csv(cdf: Iterable[tuple[int, float]]) -> str:
    return _csv_text(["rank", "fraction"], ((r, fmt(f)) for r, f in cdf))


def dumps_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def write_run_config(out_dir: str | Path, config: Mapping) -> Path:
    path = Path(out_dir) / "run.json"
    path.write_text(json.dumps(dict(config), sort_keys=True, indent=2) + "\n")
    return path
