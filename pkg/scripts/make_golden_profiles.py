"""Write the golden per-step closeness profiles for line -> shell, n = 40,
and the closeness vector of the line graph itself.

Independent of the package's BFS and float arithmetic: distances come from
networkx and every closeness value is an exact Fraction, rounded to 12
significant digits only when written.

    python scripts/make_golden_profiles.py [--n 40] [--out-dir tests/data]
"""

import argparse
from fractions import Fraction
from pathlib import Path

import networkx as nx


def closeness_exact(g):
    out = {}
    for v, dists in nx.all_pairs_shortest_path_length(g):
        out[v] = sum((Fraction(1, 2 ** d) for w, d in dists.items() if w != v), Fraction(0))
    return out


def line(n):
    g = nx.Graph()
    g.add_nodes_from(f"v{i}" for i in range(1, n + 1))
    g.add_edges_from((f"v{i}", f"v{i + 1}") for i in range(1, n))
    return g


def midpoint_targets(n):
    targets = [n]
    level = [(1, n)]
    while level:
        nxt = []
        for lo, hi in level:
            if hi - lo >= 2:
                mid = (lo + hi) // 2
                if mid >= 3:
                    targets.append(mid)
                nxt += [(mid, hi), (lo, mid)]
        level = nxt
    return targets


def profile_rows(n, targets):
    g = line(n)
    prev = closeness_exact(g)
    rows = []
    for step, j in enumerate(targets, start=1):
        g.add_edge("v1", f"v{j}")
        cur = closeness_exact(g)
        d = sum(abs(cur[v] - prev[v]) for v in g.nodes)
        rows.append((step, f"v1 v{j}", f"{float(d):.12g}"))
        prev = cur
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=40)
    ap.add_argument("--out-dir", default=str(Path(__file__).resolve().parents[1] / "tests" / "data"))
    args = ap.parse_args()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, targets in [("incremental", list(range(3, args.n + 1))), ("dichotomic", midpoint_targets(args.n))]:
        rows = profile_rows(args.n, targets)
        text = "step,edge,dC\n" + "".join(f"{s},{e},{d}\n" for s, e, d in rows)
        path = out / f"profile_{name}_n{args.n}.csv"
        path.write_text(text)
        print(f"{path}: {len(rows)} steps")
    cc = closeness_exact(line(args.n))
    path = out / f"cc_line_n{args.n}.csv"
    path.write_text("vertex,value\n" + "".join(f"{v},{float(cc[v]):.12g}\n" for v in sorted(cc)))
    print(f"{path}: {len(cc)} vertices")


if __name__ == "__main__":
    main()
