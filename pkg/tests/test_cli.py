from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from flagub.cli import main
from flagub.constructions import j_graph
from flagub.graph import read_graph

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def j8(tmp_path):
    path = tmp_path / "j8.txt"
    assert main(["construct", "--family", "jr", "--n", "8", "--r", "2", "--out", str(path)]) == 0
    return path


def test_construct_families(tmp_path, capsys):
    path = tmp_path / "g.txt"
    for argv in (["--family", "turan", "--n", "7", "--r", "3"], ["--family", "jr-star", "--n", "10", "--r", "2"],
                 ["--family", "k3r", "--r", "2"], ["--family", "cycle", "--n", "5"],
                 ["--family", "join", "--lengths", "4,5"]):
        assert main(["construct", *argv, "--out", str(path)]) == 0
        read_graph(path)
    code, out, _ = run(capsys, "construct", "--family", "jr", "--n", "8", "--r", "2", "--format", "json")
    assert code == 0 and json.loads(out)["n"] == 8
    code, _, err = run(capsys, "construct", "--family", "jr", "--n", "6", "--r", "2")
    assert code == 1 and "TooFewVertices" in err


def test_stats(j8, capsys):
    code, out, _ = run(capsys, "stats", "--input", str(j8))
    assert code == 0
    assert json.loads(out) == {"d": 4, "f": [1, 8, 24, 32, 16], "h": [1, 4, 6, 4, 1], "g": [1, 3, 2], "gamma": [1, 0, 0]}
    code, out, _ = run(capsys, "stats", "--input", str(DATA / "rp2.txt"), "--vectors", "f,h")
    assert json.loads(out) == {"d": 3, "f": [1, 6, 15, 10], "h": [1, 3, 6, 0]}


def test_check_topology(j8, capsys):
    code, out, _ = run(capsys, "check", "--input", str(j8), "--what", "flag-manifold")
    assert code == 0 and json.loads(out)["homology_manifold"]
    code, out, _ = run(capsys, "check", "--input", str(DATA / "rp2.txt"), "--what", "sphere")
    assert code == 1 and json.loads(out)["homology"]["torsion"] == {"1": [2]}
    assert run(capsys, "check", "--input", str(j8), "--what", "eulerian")[0] == 0
    assert run(capsys, "check", "--input", str(j8), "--what", "pseudomanifold")[0] == 0


def test_check_extremal(tmp_path, capsys):
    g = tmp_path / "g.txt"
    g.write_text(j_graph(12, 2).to_text())
    part = tmp_path / "p.txt"
    part.write_text("\n0 1 2 3 4 5\n6 7 8 9 10 11\n")
    code, out, _ = run(capsys, "check", "--what", "extremal", "--input", str(g), "--partition", str(part),
                       "--eta", "1/56", "--r", "2")
    assert code == 0 and json.loads(out)["extremal"]
    part.write_text("0 1\n2 3 4 5 6\n7 8 9 10 11\n")
    code, out, _ = run(capsys, "check", "--what", "extremal", "--input", str(g), "--partition", str(part), "--r", "2")
    assert code == 1 and not json.loads(out)["conditions"]["a"]["passed"]


def test_verify(j8, tmp_path, capsys):
    out_path = tmp_path / "rep.json"
    code, _, _ = run(capsys, "verify", "--conjecture", "upper-bounds", "--input", str(j8), "--r", "2",
                     "--out", str(out_path))
    assert code == 0 and json.loads(out_path.read_text())["verdict"] == "AllHold"
    code, out, err = run(capsys, "verify", "--conjecture", "ratio-chain", "--input", str(DATA / "rp2.txt"),
                         "--r", "2", "--kind", "gamma")
    assert code == 1 and "not applicable" in err


def test_search_and_probe(tmp_path, capsys):
    out = tmp_path / "f.jsonl"
    code, _, err = run(capsys, "search", "--pseudo", "--d", "2", "--n-max", "7", "--out", str(out))
    assert code == 0 and len(out.read_text().splitlines()) == 4
    code, _, err = run(capsys, "search", "--pseudo", "--d", "4", "--n-max", "8", "--mode", "random", "--budget", "0")
    assert code == 1 and "budget" in err
    code, out, _ = run(capsys, "probe", "--growth", "--r", "2", "--n-min", "8", "--n-max", "9")
    rows = [json.loads(x) for x in out.splitlines()]
    assert rows[0] == {"n": 8, "e": 32, "ratio": "1/2", "within_bound": True}


def test_maximize(tmp_path, capsys):
    code, out, _ = run(capsys, "maximize", "--n", "24", "--r", "2", "--coeffs", "1,0,0")
    assert code == 0
    data = json.loads(out)
    assert data["value"] == "168"
    assert all(m["kind"] == "PathRepair" for m in data["moves"])
    start = tmp_path / "s.txt"
    start.write_text(j_graph(24, 2).with_edges(remove=[(0, 12)]).to_text())
    code, _, err = run(capsys, "maximize", "--n", "24", "--r", "2", "--coeffs", "1,0,0", "--start", str(start))
    assert code == 1 and "NotExtremal" in err


def test_module_entry_point(j8):
    res = subprocess.run([sys.executable, "-m", "flagub", "stats", "--input", str(j8), "--vectors", "f"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["f"] == [1, 8, 24, 32, 16]
