import json
import os
import subprocess

import pytest

CLI = os.environ.get("CYCLEMOD_CLI", "cyclemod")


def run(*args, cwd=None):
    p = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, cwd=cwd)
    return p.returncode, p.stdout, p.stderr


@pytest.fixture
def k4(tmp_path):
    f = tmp_path / "k4.g6"
    f.write_text("C~\n")
    return f


def test_spectrum_k4(k4):
    code, out, _ = run("spectrum", "--k", 3, k4)
    assert code == 0
    assert json.loads(out)["residues"] == [0, 1]


def test_not_found_exit(k4):
    code, out, _ = run("spectrum", "--k", 3, "--m", 2, k4)
    assert code == 3 and json.loads(out)["status"] == "not-found"


def test_unknown_flag_is_usage_error(k4):
    code, out, err = run("spectrum", "--k", 3, "--bogus", k4)
    assert code == 2
    assert json.loads(out)["error"]["type"] == "usage"
    assert err


def test_domain_error_payload(tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("~~~\n")
    code, out, _ = run("spectrum", "--k", 3, bad)
    assert code == 1
    assert json.loads(out)["status"] == "error"


def test_bounds():
    code, out, _ = run("bounds", "--k", 3)
    b = json.loads(out)
    assert code == 0 and b["18k2"] == 162 and b["3k4"] == 243


def test_deterministic_multi_file(tmp_path, k4):
    p = tmp_path / "p.g6"
    p.write_text("IheA@GUAo\n")
    a = run("--jobs", 1, "theta", k4, p)
    b = run("--jobs", 4, "theta", k4, p)
    assert a == b and a[0] == 0
    assert [r["file"] for r in json.loads(a[1])["results"]] == [str(k4), str(p)]


def test_necklace_round_trip(tmp_path):
    w = {
        "kind": "k_close_pair", "k": 1,
        "path": [0], "cycle": [1, 2, 3], "connectors": [[0, 1]],
        "host": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [1, 3]]},
    }
    f = tmp_path / "w.json"
    f.write_text(json.dumps(w))
    code, out, _ = run("necklace", "validate", "--k", 1, f)
    assert code == 0 and json.loads(out)["valid"]
    code, out, _ = run("necklace", "validate", "--k", 2, f)
    assert code == 1 and json.loads(out)["violations"]


def test_counterexample_files(tmp_path):
    g6 = tmp_path / "ce.g6"
    rep = tmp_path / "ce.json"
    code, out, _ = run("counterexample", "--m", 9, "--k", 12, "--min-n", 1, "--out", g6, "--report", rep)
    assert code == 0
    assert json.loads(rep.read_text())["certified"]
    code, out, _ = run("spectrum", "--k", 12, "--m", 9, g6)
    assert code == 3
