"""Installation self-checks: metric axioms on a small metagraph and
sensitivity fuzzing. Used by ``centdist selftest``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import metagraph as mg
from .centrality import CentralityKind
from .distance import is_sensitive
from .graph import NamedGraph, vertex_names

TOL = 1e-9


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


def exact_matrix(kind: CentralityKind | str, k: int = 4) -> np.ndarray:
    idx = mg.MetagraphIndex.of_size(k)
    return mg.all_pairs(idx, mg.centrality_weight(idx, kind))


def metric_violations(d: np.ndarray, tol: float = TOL) -> dict[str, int]:
    """Count separation, symmetry and triangle violations of a distance matrix."""
    off = ~np.eye(len(d), dtype=bool)
    separation = int(np.count_nonzero(np.abs(np.diag(d)) > tol) + np.count_nonzero(d[off] <= tol))
    symmetry = int(np.count_nonzero(np.abs(d - d.T) > tol))
    # d[i, j] <= d[i, m] + d[m, j] for every intermediate m
    triangle = 0
    for m in range(len(d)):
        triangle += int(np.count_nonzero(d > d[:, [m]] + d[[m], :] + tol))
    return {"separation": separation, "symmetry": symmetry, "triangle": triangle}


def random_graph(rng: np.random.Generator, n_min: int = 2, n_max: int = 8) -> NamedGraph:
    n = int(rng.integers(n_min, n_max + 1))
    vs = vertex_names(n)
    p = rng.uniform(0.2, 0.9)
    edges = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return NamedGraph.from_edges(edges, vs)


def check_metric_axioms(k: int = 4) -> list[CheckResult]:
    out = []
    for kind in CentralityKind:
        v = metric_violations(exact_matrix(kind, k))
        out.append(CheckResult(f"metric axioms, {kind.value}, MG_{k}", not any(v.values()), str(v)))
    return out


def check_sensitivity(n_graphs: int = 200, seed: int = 0) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    graphs = [random_graph(rng) for _ in range(n_graphs)]
    out = []
    for kind in CentralityKind:
        bad = None
        for g in graphs:
            ok, witness = is_sensitive(kind, g)
            if not ok:
                bad = (g.sorted_edges(), witness)
                break
        out.append(CheckResult(f"sensitivity, {kind.value}, {n_graphs} random graphs", bad is None,
                               "" if bad is None else f"counterexample {bad}"))
    return out


def check_metagraph(k: int = 4) -> list[CheckResult]:
    idx = mg.MetagraphIndex.of_size(k)
    return [
        CheckResult(f"MG_{k} bipartite", mg.check_bipartite(idx)),
        CheckResult(f"MG_{k} size", idx.size == 2 ** (k * (k - 1) // 2), str(idx.size)),
    ]


def selftest() -> list[CheckResult]:
    return check_metagraph(4) + check_metric_axioms(4) + check_sensitivity(200, seed=0)
