import hypothesis.strategies as st
import pytest

from centdist.graph import NamedGraph, vertex_names

ACCEPTANCE_LINES = []


@st.composite
def named_graphs(draw, min_n=1, max_n=7, labels=None):
    n = draw(st.integers(min_n, max_n))
    vs = labels[:n] if labels else vertex_names(n)
    pairs = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return NamedGraph.from_edges([p for p, keep in zip(pairs, mask) if keep], vs)


@st.composite
def nested_pairs(draw, min_n=2, max_n=8):
    """(g1, g2) on a shared vertex set with E(g1) a proper subset of E(g2)."""
    g2 = draw(named_graphs(min_n=min_n, max_n=max_n).filter(lambda g: g.edges))
    edges = sorted(g2.edges)
    keep = draw(st.lists(st.booleans(), min_size=len(edges), max_size=len(edges)))
    sub = [e for e, k in zip(edges, keep) if k]
    if len(sub) == len(edges):
        sub = sub[:-1]
    return NamedGraph.from_edges(sub, g2.vertices), g2


@pytest.fixture
def acceptance_report():
    def report(number, name, passed, detail=""):
        line = f"criterion {number} [{'PASS' if passed else 'FAIL'}] {name}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
