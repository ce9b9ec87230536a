"""Closeness-distance profiles of the incremental, dichotomic and greedy
line -> shell evolutions; prints a side-by-side table and optionally saves a
plot (needs matplotlib).

    python scripts/run_line_to_shell.py --n 40 [--plot profile.png]
"""

import argparse

from centdist.evolution import dichotomic_path, greedy_path, incremental_path, profile
from centdist.graph import line_graph, shell_graph


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=40)
    ap.add_argument("--centrality", default="closeness")
    ap.add_argument("--plot")
    args = ap.parse_args()

    paths = {
        "incremental": incremental_path(args.n),
        "dichotomic": dichotomic_path(args.n),
        "greedy": greedy_path(args.centrality, line_graph(args.n), shell_graph(args.n)),
    }
    profiles = {name: profile(p, args.centrality) for name, p in paths.items()}
    print("step " + " ".join(f"{name:>14}" for name in profiles))
    for i in range(args.n - 2):
        print(f"{i + 1:4d} " + " ".join(f"{p.steps[i]:14.6f}" for p in profiles.values()))
    print("sum  " + " ".join(f"{p.cumulative:14.6f}" for p in profiles.values()))

    if args.plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(6, 4))
        for name, p in profiles.items():
            ax.plot(range(1, len(p.steps) + 1), p.steps, marker=".", label=name)
        ax.set_xlabel("step")
        ax.set_ylabel(f"{args.centrality} distance to previous graph")
        ax.legend()
        fig.tight_layout()
        fig.savefig(args.plot, dpi=120)


if __name__ == "__main__":
    main()
