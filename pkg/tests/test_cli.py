import json
import subprocess
import sys
from pathlib import Path

import pytest

from centdist.cli import main
from centdist.graph import cycle_graph, line_graph, vertex_names, NamedGraph
from centdist.io import write_edge_list

DATA = Path(__file__).parent / "data"


@pytest.fixture
def graphs(tmp_path):
    write_edge_list(line_graph(5), tmp_path / "line5.edges")
    write_edge_list(cycle_graph(5), tmp_path / "cycle5.edges")
    write_edge_list(line_graph(40), tmp_path / "line40.edges")
    write_edge_list(NamedGraph(frozenset(vertex_names(6))), tmp_path / "empty6.edges")
    return tmp_path


def test_dist_degree_approx(graphs, capsys):
    assert main(["dist", "--centrality", "degree", "--mode", "approx",
                 str(graphs / "line5.edges"), str(graphs / "cycle5.edges")]) == 0
    assert capsys.readouterr().out == "2\n"


def test_dist_exact(graphs, capsys):
    assert main(["dist", "--centrality", "degree", "--mode", "exact",
                 str(graphs / "line5.edges"), str(graphs / "cycle5.edges")]) == 0
    assert capsys.readouterr().out == "2\n"


def test_exact_on_large_universe_exits_2(graphs, capsys):
    code = main(["dist", "--centrality", "closeness", "--mode", "exact",
                 str(graphs / "empty6.edges"), str(graphs / "empty6.edges")])
    assert code == 2
    assert "UniverseTooLarge" in capsys.readouterr().err


def test_usage_error_exits_1(capsys):
    assert main(["dist", "--centrality", "pagerank", "a", "b"]) == 1
    assert main([]) == 1


def test_missing_file_exits_1(tmp_path):
    assert main(["centrality", "--centrality", "degree", str(tmp_path / "nope.edges")]) == 1


def test_metagraph_bipartite(capsys):
    assert main(["metagraph", "--k", "5", "--check", "bipartite"]) == 0
    summary = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert summary == {"bipartite": True, "k": 5, "nodes": 1024}


def test_metagraph_layers(capsys):
    assert main(["metagraph", "--k", "4", "--check", "layers"]) == 0
    summary = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert summary["layer_edges"] == summary["expected"] == 64


def test_centrality_matches_golden(graphs, tmp_path):
    out = tmp_path / "cc.csv"
    assert main(["centrality", "--centrality", "closeness", "--out", str(out), str(graphs / "line40.edges")]) == 0
    assert out.read_text() == (DATA / "cc_line_n40.csv").read_text()


@pytest.mark.parametrize("path", ["incremental", "dichotomic"])
def test_evolve_matches_golden(tmp_path, path):
    out = tmp_path / "run" / "profile.csv"
    assert main(["evolve", "--n", "40", "--path", path, "--centrality", "closeness", "--out", str(out)]) == 0
    assert out.read_text() == (DATA / f"profile_{path}_n40.csv").read_text()
    assert json.loads((out.parent / "run.json").read_text())["path"] == path


def test_sample_is_reproducible(graphs, tmp_path):
    dirs = [tmp_path / "a", tmp_path / "b"]
    for d in dirs:
        assert main(["sample", "--ref", str(graphs / "line5.edges"), "--radius", "3",
                     "--count", "12", "--seed", "4", "--out-dir", str(d)]) == 0
    files = sorted(p.name for p in dirs[0].glob("sample_*.edges"))
    assert len(files) == 12 and files[0] == "sample_00.edges"
    for name in files:
        assert (dirs[0] / name).read_bytes() == (dirs[1] / name).read_bytes()
    cfg = json.loads((dirs[0] / "run.json").read_text())
    assert cfg["seed"] == 4 and cfg["with_replacement"] is True


def test_sample_requires_seed(graphs):
    assert main(["sample", "--ref", str(graphs / "line5.edges"), "--radius", "1", "--out-dir", "x"]) == 1


def test_experiment_outputs(tmp_path):
    trace = tmp_path / "trace.txt"
    trace.write_text("a b 0\nb c 10\na c 20\nc d 30\nb d 40\n")
    runs = []
    for name, jobs in (("a", "1"), ("b", "2")):
        out = tmp_path / name
        assert main(["--jobs", jobs, "experiment", "--events", str(trace), "--window", "10",
                     "--mode", "cumulative", "--count", "25", "--seed", "3", "--out-dir", str(out)]) == 0
        runs.append(out)
    for f in ("records.csv", "cdf.csv"):
        assert (runs[0] / f).read_bytes() == (runs[1] / f).read_bytes()
    header = (runs[0] / "records.csv").read_text().splitlines()[0]
    assert header == "t,radius,observed_dC,rank,p5,p50,p95,skipped"
    cfg = json.loads((runs[0] / "run.json").read_text())
    assert cfg["rank_ties"] == "strict-less" and cfg["timesteps"] == 5


def test_experiment_unsorted_trace(tmp_path):
    trace = tmp_path / "trace.txt"
    trace.write_text("a b 10\nb c 0\n")
    args = ["experiment", "--events", str(trace), "--window", "5", "--seed", "0", "--out-dir", str(tmp_path / "o")]
    assert main(args) == 2
    assert main(args + ["--sort"]) == 0


def test_selftest_subprocess():
    res = subprocess.run([sys.executable, "-m", "centdist.cli", "selftest"], capture_output=True, text=True)
    assert res.returncode == 0, res.stdout + res.stderr
    assert "FAIL" not in res.stdout
