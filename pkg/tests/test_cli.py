import json
import subprocess
import sys

import pytest

from affsig.cli import run, sweep
from affsig.designs import build_affine_geometry


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_ag22(capsys):
    code, out, _ = invoke(capsys, "verify", "--source", "ag", "2", "2", "1")
    report = json.loads(out)
    assert code == 0
    assert report["signature"]["computed"] == [1, 4, 5]
    assert report["passed"] is True
    assert report["charpoly"]["equal"] is True


def test_verify_sylvester_exit_1(capsys):
    code, out, _ = invoke(capsys, "verify", "--source", "sylvester", "3")
    report = json.loads(out)
    assert code == 1
    assert report["signature"] == {"computed": [8, 8, 6], "from_factors": [8, 8, 6],
                                   "theorem1_printed": [8, 7, 6]}
    failed = [c["name"] for c in report["checks"] if not c["passed"]]
    assert "inertia == theorem 1 (printed)" in failed


def test_verify_multiple_sources_sorted(capsys):
    code, out, _ = invoke(capsys, "verify", "--source", "ag", "2", "3",
                          "--source", "ag", "2", "2")
    reports = json.loads(out)["reports"]
    assert code == 0
    assert [r["params"]["v"] for r in reports] == [4, 9]


def test_sweep_3_3(capsys):
    code, out, _ = invoke(capsys, "sweep", "--n-max", "3", "--mu-max", "3")
    assert code == 1
    assert json.loads(out)["discrepancies"] == [[2, 2], [2, 3]]


def test_sweep_4_4():
    result = sweep(4, 4)
    assert result["discrepancies"] == [[2, 2], [2, 3], [2, 4]]
    skipped = [(r["n"], r["mu"]) for r in result["rows"] if not r["admissible"]]
    assert skipped == [(3, 2), (3, 4), (4, 2), (4, 3)]


def test_sweep_text(capsys):
    code, out, _ = invoke(capsys, "sweep", "--n-max", "2", "--mu-max", "2", "--format", "text")
    assert code == 1
    assert "DISCREPANCY" in out and "(8, 7, 6)" in out


def test_sweep_no_discrepancy(capsys):
    code, _, _ = invoke(capsys, "sweep", "--n-max", "3", "--mu-max", "1")
    assert code == 0


def test_build_validate_round_trip(capsys, tmp_path):
    path = tmp_path / "ag33.json"
    code, _, _ = invoke(capsys, "build", "--source", "ag", "3", "3", "--out", str(path))
    assert code == 0
    code, out1, _ = invoke(capsys, "validate", "--source", "ag", "3", "3")
    code2, out2, _ = invoke(capsys, "validate", "--source", "file", str(path))
    assert code == code2 == 0
    assert out1 == out2
    assert json.loads(out2) == {"v": 27, "b": 39, "r": 13, "k": 9, "lambda": 4,
                                "n": 3, "mu": 3}


def test_build_is_byte_stable(capsys):
    _, a, _ = invoke(capsys, "build", "--source", "paley", "11")
    _, b, _ = invoke(capsys, "build", "--source", "paley", "11")
    assert a == b
    _, c, _ = invoke(capsys, "verify", "--source", "ag", "2", "4")
    _, d, _ = invoke(capsys, "verify", "--source", "ag", "2", "4")
    assert c == d


def test_validate_broken_file(capsys, tmp_path):
    d = build_affine_geometry(2, 2)
    data = json.loads(d.to_json())
    data["blocks"][1] = [0, 3]  # class 0 now covers point 0 twice
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(data))
    code, _, err = invoke(capsys, "validate", "--source", "file", str(path))
    assert code == 2
    assert "not-resolvable" in err


def test_distmat_csv(capsys):
    code, out, _ = invoke(capsys, "distmat", "--source", "ag", "2", "2")
    rows = [list(map(int, line.split(","))) for line in out.splitlines()]
    assert code == 0
    assert len(rows) == 10 and all(len(r) == 10 for r in rows)
    assert sum(rows[0]) == 18


def test_charpoly(capsys):
    code, out, _ = invoke(capsys, "charpoly", "--source", "ag", "2", "3")
    data = json.loads(out)
    assert code == 0 and data["equal"]
    assert data["computed"] == data["theorem2"]
    assert len(data["computed"]) == 22


def test_signature(capsys):
    code, out, _ = invoke(capsys, "signature", "--source", "ag", "2", "3")
    data = json.loads(out)
    assert code == 0
    assert data["computed"] == data["from_factors"] == data["theorem1_printed"] == [12, 9, 0]
    code, out, _ = invoke(capsys, "signature", "--source", "ag", "3", "2")
    assert code == 1
    assert json.loads(out)["matches_factors"] is True


@pytest.mark.parametrize("argv", [
    ["verify", "--source", "nope", "1"],
    ["verify", "--source", "ag", "2"],
    ["verify", "--source", "ag", "1", "3"],
    ["verify", "--source", "paley", "5"],
    ["verify", "--source", "sylvester", "x"],
    ["validate", "--source", "file", "/does/not/exist.json"],
    ["sweep", "--n-max", "1", "--mu-max", "1"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = invoke(capsys, *argv)
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "affsig", "signature", "--source", "ag", "2", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["computed"] == [1, 4, 5]
