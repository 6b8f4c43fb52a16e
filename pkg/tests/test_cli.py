import json
import subprocess
import sys
import time

import pytest

from assocpoly.cli import load_polytope_json, main, polytope_json
from assocpoly.ratgeom import contains
from assocpoly.trees import j_lattice, k_lattice

from conftest import F


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_polytope_text(capsys):
    code, out, _ = run(capsys, "polytope", "k", "--n", "3")
    assert code == 0
    assert "(0, 0, 2)" in out and "1 1 1 = 2" in out


@pytest.mark.parametrize("family, n, lattice", [("k", 5, k_lattice), ("j", 4, j_lattice)])
def test_polytope_json_round_trip(capsys, tmp_path, family, n, lattice):
    code, out, _ = run(capsys, "polytope", family, "--n", str(n), "--format", "json")
    assert code == 0
    path = tmp_path / "p.json"
    path.write_text(out)
    fam, m, a, verts, hrep = load_polytope_json(path.read_text())
    assert (fam, m) == (family, n)
    assert set(verts) == lattice(n)
    assert all(contains(hrep, v) for v in verts)
    assert json.loads(polytope_json(fam, m, a, hrep, verts)) == json.loads(out)


@pytest.mark.parametrize("family, n, header", [("k", 5, "14 9 21"), ("j", 4, "21 13 32")])
def test_off_header(capsys, family, n, header):
    code, out, _ = run(capsys, "polytope", family, "--n", str(n), "--format", "off")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "OFF" and lines[1] == header


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "polytope", "k", "--n", "13")[0] == 3
    assert run(capsys, "polytope", "k", "--n", "6", "--format", "off")[0] == 3
    assert run(capsys, "polytope", "k", "--n", "3", "--a", "1/2")[0] == 2
    code, _, err = run(capsys, "trees", "parse", "--word", "x1x2")
    assert code == 4 and "parse error" in err
    bad = tmp_path / "m.txt"
    bad.write_text("elements: a b\ntable: a a / b a\n")
    code, _, err = run(capsys, "bar", "--monoid", str(bad), "--n", "2")
    assert code == 5 and err.startswith("error:")
    assert run(capsys, "verify", "--suite", "trees", "--n-max", "13")[0] == 3
    assert run(capsys, "verify", "--suite", "trees", "--n-max", "0")[0] == 2


def test_trees_parse(capsys):
    code, out, _ = run(capsys, "trees", "parse", "--word", "x1x2@x3@")
    assert code == 0
    assert out.splitlines() == ["tree: ((x1 x2) x3)", "a-coords: (0, 1, 1)", "b-coords: (2, 0, 0)"]


def test_trees_bearded_coords(capsys):
    _, out, _ = run(capsys, "trees", "coords", "--n", "2", "--bearded")
    assert out.splitlines() == ["x1nx2nb (1/2, 1)", "x1x2#n (0, 3/2)"]


def test_bar_counts(capsys):
    code, out, _ = run(capsys, "bar", "--monoid", "builtin:c2", "--n", "3")
    assert code == 0
    assert "counts: 1 1 1 1" in out and "euler: 0" in out
    _, out, _ = run(capsys, "bar", "--monoid", "builtin:c2", "--n", "2", "--format", "json")
    assert json.loads(out)["counts"] == [1, 1, 1]


def test_verify_deterministic(capsys):
    first = run(capsys, "verify", "--suite", "degeneracy", "--n-max", "3", "--cases", "20", "--seed", "7")
    second = run(capsys, "verify", "--suite", "degeneracy", "--n-max", "3", "--cases", "20", "--seed", "7")
    assert first == second and first[0] == 0
    assert first[1].rstrip().endswith("checks passed")


def test_verify_all_small_is_fast():
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "assocpoly", "verify", "--suite", "all", "--n-max", "2"],
        capture_output=True, text=True,
    )
    elapsed = time.perf_counter() - start
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert elapsed < 1.0
