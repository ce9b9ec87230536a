"""Command-line entry point: ``centdist <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 domain error.
"""

from __future__ import annotations

import argparse
import logging
import math
import os
import sys
from pathlib import Path

from . import checks
from . import io as cio
from . import metagraph as mg
from .centrality import CentralityKind, centrality
from .distance import DistanceMode, approx_distance, exact_distance
from .errors import CentDistError
from .evolution import dichotomic_path, edge_label, greedy_path, incremental_path, profile
from .experiment import discretize, rank_cdf, rank_zero_fraction, run_experiment, triadic_closure_trace
from .graph import line_graph, shell_graph
from .sampler import sample_at_radius

log = logging.getLogger("centdist")

KINDS = [k.value for k in CentralityKind]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _config(args) -> dict:
    cfg = {k: (str(v) if isinstance(v, Path) else v) for k, v in vars(args).items() if k != "func"}
    return cfg


def cmd_centrality(args) -> int:
    g = cio.read_edge_list(args.graph)
    text = cio.centrality_csv(centrality(args.centrality, g))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_dist(args) -> int:
    g1 = cio.read_edge_list(args.g1)
    g2 = cio.read_edge_list(args.g2)
    if DistanceMode(args.mode) is DistanceMode.EXACT:
        value = exact_distance(args.centrality, g1, g2, cap=args.cap)
    else:
        value = approx_distance(args.centrality, g1, g2)
    print(cio.fmt(value))
    return 0


def cmd_metagraph(args) -> int:
    idx = mg.MetagraphIndex.of_size(args.k, cap=args.cap)
    summary = {"k": args.k, "nodes": idx.size}
    lines = [f"MG_{args.k}: {idx.size} nodes, {idx.n_pairs} neighbours per node"]
    if args.check == "bipartite":
        ok = mg.check_bipartite(idx)
        even, odd = mg.parity_classes(idx)
        summary["bipartite"] = ok
        lines.append(f"bipartite: {ok} (even-edge graphs {even}, odd-edge graphs {odd})")
    elif args.check == "layers":
        count = mg.layer_edge_count(args.k, cap=args.cap)
        summary["layer_edges"] = count
        summary["expected"] = 2 ** math.comb(args.k, 2)
        lines.append(f"edges between MG_{args.k} and MG_{args.k + 1}: {count}")
    else:
        summary["expected"] = 2 ** math.comb(args.k, 2)
        lines.append(f"expected 2^C({args.k},2) = {summary['expected']}")
    for line in lines:
        print(line)
    print(cio.dumps_json(summary))
    return 0


def cmd_evolve(args) -> int:
    kind = CentralityKind.parse(args.centrality)
    if args.path == "incremental":
        path = incremental_path(args.n)
    elif args.path == "dichotomic":
        path = dichotomic_path(args.n)
    else:
        path = greedy_path(kind, line_graph(args.n), shell_graph(args.n))
    prof = profile(path, kind)
    text = cio.profile_csv([edge_label(op) for op in path.edits], prof.steps)
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
        cio.write_run_config(out.parent, _config(args))
    else:
        sys.stdout.write(text)
    log.info("cumulative %s distance: %s", kind.value, cio.fmt(prof.cumulative))
    return 0


def cmd_sample(args) -> int:
    ref = cio.read_edge_list(args.ref)
    ss = sample_at_radius(ref, args.radius, args.count, args.seed)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    width = len(str(args.count - 1))
    for i, g in enumerate(ss.samples):
        cio.write_edge_list(g, out / f"sample_{i:0{width}d}.edges")
    cio.write_run_config(out, _config(args) | {"with_replacement": True})
    print(f"wrote {len(ss)} samples at radius {args.radius} to {out}")
    return 0


def cmd_experiment(args) -> int:
    if args.synthetic is not None:
        dg = triadic_closure_trace(seed=args.synthetic)
    else:
        events = cio.read_events(args.events, sort=args.sort)
        dg = discretize(events, args.window, args.mode)
    kind = CentralityKind.parse(args.centrality)
    records = run_experiment(dg, kind, args.count, args.seed, active_only=args.active_only, jobs=args.jobs)
    cdf = rank_cdf(records)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "records.csv").write_text(cio.records_csv(records))
    (out / "cdf.csv").write_text(cio.cdf_csv(cdf))
    cio.write_run_config(out, _config(args) | {"timesteps": len(dg), "rank_ties": "strict-less"})
    usable = sum(not r.skipped for r in records)
    print(f"{len(dg)} snapshots, {usable} usable transitions, rank-0 fraction {cio.fmt(rank_zero_fraction(records))}")
    return 0


def cmd_selftest(args) -> int:
    results = checks.selftest()
    for r in results:
        print(r.line())
    return 0 if all(r.passed for r in results) else 2


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="centdist", description="Centrality distances between named graphs.")
    p.add_argument("-v", "--verbose", action="count", default=0)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes (results do not depend on it)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("centrality", help="centrality vector of one graph as CSV")
    s.add_argument("--centrality", choices=KINDS, required=True)
    s.add_argument("--out")
    s.add_argument("graph")
    s.set_defaults(func=cmd_centrality)

    s = sub.add_parser("dist", help="centrality distance between two graphs")
    s.add_argument("--centrality", choices=KINDS, required=True)
    s.add_argument("--mode", choices=[m.value for m in DistanceMode], default="approx")
    s.add_argument("--cap", type=int, default=mg.DEFAULT_CAP, help="largest vertex universe for exact mode")
    s.add_argument("g1")
    s.add_argument("g2")
    s.set_defaults(func=cmd_dist)

    s = sub.add_parser("metagraph", help="structural checks on MG_k")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--check", choices=["bipartite", "layers", "size"], default="size")
    s.add_argument("--cap", type=int, default=mg.DEFAULT_CAP)
    s.set_defaults(func=cmd_metagraph)

    s = sub.add_parser("evolve", help="per-step distance profile from line to shell graph")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--path", choices=["incremental", "dichotomic", "greedy"], required=True)
    s.add_argument("--centrality", choices=KINDS, default="closeness")
    s.add_argument("--out")
    s.set_defaults(func=cmd_evolve)

    s = sub.add_parser("sample", help="random graphs at a fixed edit distance")
    s.add_argument("--ref", required=True)
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--count", type=int, default=200)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--out-dir", required=True)
    s.set_defaults(func=cmd_sample)

    s = sub.add_parser("experiment", help="observed vs sampled successors over a dynamic graph")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--events", help="trace file with 'u v unix_timestamp' lines")
    src.add_argument("--synthetic", type=int, metavar="SEED", help="use the triadic-closure simulator instead")
    s.add_argument("--window", type=float, default=86400.0)
    s.add_argument("--mode", choices=["interaction", "cumulative"], default="interaction")
    s.add_argument("--centrality", choices=KINDS, default="closeness")
    s.add_argument("--count", type=int, default=200)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--active-only", action="store_true", help="sample only among vertices active in the transition")
    s.add_argument("--sort", action="store_true", help="accept and sort out-of-order traces")
    s.add_argument("--out-dir", required=True)
    s.set_defaults(func=cmd_experiment)

    s = sub.add_parser("selftest", help="quick installation checks")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except CentDistError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
