import json
import os
import subprocess
import sys

import pytest

from conftest import GEN_833, SEED_41, lines
from qrm.cli import main
from qrm.construct import build_generator, parse_code


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "r,t,expected",
    [(3, 1, "[[8,3,3]]"), (10, 5, "[[1024,0,48]]"), (6, 3, "[[64,0,12]]")],
)
def test_params(capsys, r, t, expected):
    code, out, _ = run(capsys, "params", "--r", str(r), "--t", str(t))
    assert code == 0 and out.strip() == expected


def test_params_range_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["params", "--r", "3", "--t", "3"])
    assert exc.value.code == 2


def test_table(capsys):
    code, out, _ = run(capsys, "table")
    assert code == 0
    rows = {int(l.split()[0]): [int(v) for v in l.split()[1:]] for l in out.splitlines()[1:]}
    assert rows[512] == [501, 456, 336, 126, -126]
    assert rows[4] == [0]
    assert sum(len(v) for v in rows.values()) == 35


def test_build_text(capsys, tmp_path):
    path = tmp_path / "g.txt"
    code, _, _ = run(capsys, "build", "--r", "3", "--t", "1", "--output", str(path))
    assert code == 0
    text = path.read_text()
    assert text.splitlines()[:11] == lines(GEN_833)
    back = parse_code(text)
    assert back.generator == build_generator(3, 1).generator


def test_build_seed_reports_failure(capsys):
    code, out, err = run(capsys, "build", "--r", "2", "--t", "1")
    assert code == 0
    assert out.splitlines()[:4] == lines(SEED_41)
    assert "validation: FAILED" in out
    assert "does not satisfy" in err


def test_build_json(capsys):
    code, out, _ = run(capsys, "build", "--r", "5", "--t", "2", "--format", "json")
    doc = json.loads(out)
    assert (doc["n"], doc["k"], doc["d"]) == (32, 10, 6)
    assert len(doc["generator_x"]) == 42 and len(doc["stabilizer_z"]) == 22
    assert doc["validation"]["selfdual_ok"] is True


@pytest.mark.parametrize("r,t,expected", [(3, 1, 0), (4, 2, 1), (5, 2, 0), (2, 1, 1)])
def test_verify_exit_codes(capsys, r, t, expected):
    code, out, _ = run(capsys, "verify", "--r", str(r), "--t", str(t))
    assert code == expected


def test_verify_strict_includes_direct_comparison(capsys):
    code, out, _ = run(capsys, "verify", "--r", "3", "--t", "1", "--strict")
    assert code == 1
    assert "equals (3,2) generator: no" in out


def test_distance_rowspace(capsys):
    code, out, _ = run(capsys, "distance", "--r", "3", "--t", "1")
    assert code == 0 and "distance = 3" in out


def test_distance_six04(capsys):
    code, out, _ = run(capsys, "distance", "--code", "six04", "--method", "both")
    assert code == 0 and out.count("distance = 4") == 2


def test_distance_input_file(capsys, tmp_path):
    path = tmp_path / "c.json"
    run(capsys, "build", "--r", "3", "--t", "1", "--format", "json", "--output", str(path))
    code, out, _ = run(capsys, "distance", "--input", str(path), "--method", "lowweight", "--json")
    assert code == 0
    doc = json.loads(out.splitlines()[-1])
    assert doc[0]["value"] == 3 and " | " in doc[0]["witness"]


@pytest.mark.slow
def test_distance_32_lowweight(capsys):
    code, out, _ = run(capsys, "distance", "--r", "5", "--t", "2", "--method", "lowweight", "--max-weight", "6")
    assert code == 0 and "distance = 6" in out and "witness:" in out


def test_distance_row_cap_is_usage_error(capsys):
    code, _, err = run(capsys, "distance", "--r", "5", "--t", "2")
    assert code == 2 and "row_cap" in err


@pytest.mark.parametrize("r,t,errors", [(3, 1, 1), (5, 2, 2), (3, 1, 0)])
def test_decode_sim(capsys, r, t, errors):
    code, out, _ = run(
        capsys, "decode-sim", "--r", str(r), "--t", str(t), "--errors", str(errors),
        "--trials", "10000", "--seed", "42", "--json",
    )
    assert code == 0
    doc = json.loads(out.splitlines()[-1])
    assert doc["failures"] == 0 and doc["trials"] == 10000 and doc["seed"] == 42


def test_puncture(capsys):
    code, out, _ = run(capsys, "puncture", "--code", "six04")
    assert code == 0
    rows = out.strip().splitlines()
    assert len(rows) == 6
    assert all("[[5,1,3]]" in r and "syndromes=16/16" in r for r in rows)


def test_puncture_bad_position(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["puncture", "--position", "6"])
    assert exc.value.code == 2


def test_module_runs_deterministically():
    cmd = [sys.executable, "-m", "qrm", "decode-sim", "--r", "3", "--t", "1", "--errors", "2", "--trials", "500", "--seed", "9"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True, env={**os.environ, "QRM_THREADS": "3"}).stdout
    assert a == b and b"seed=9" in a
