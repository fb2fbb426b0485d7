import io
import json
import subprocess
import sys

import pytest

from tangled.cli import main
from tangled.enumeration import gen_tangled
from tangled.tangle import classify


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, expected", [
    (["count", "--k", "3", "--n", "4", "--method", "formula"], "292\n"),
    (["count", "--k", "3", "--n", "2", "--no-isolated"], "4\n"),
    (["count", "--k", "3", "--n", "3", "--method", "brute"], "39\n"),
    (["count", "--k", "3", "--n", "5", "--method", "vt-dp"], "2635\n"),
    (["count", "--k", "3", "--n", "2", "--no-isolated", "--method", "vt-dp"], "4\n"),
    (["count", "--k", "3", "--n", "2", "--no-isolated", "--method", "brute"], "4\n"),
])
def test_count(argv, expected, capsys):
    code, out, err = run(argv, capsys)
    assert (code, out, err) == (0, expected, "")


def test_count_brute_bound(capsys):
    code, out, err = run(["count", "--k", "3", "--n", "9", "--method", "brute"], capsys)
    assert code == 2 and out == ""
    assert "n <= 6" in err


def test_count_rejects_bad_k(capsys):
    code, _, err = run(["count", "--k", "1", "--n", "3"], capsys)
    assert code == 2 and "--k" in err
    code, _, err = run(["count", "--k", "99", "--n", "3"], capsys)
    assert code == 2 and "capped" in err


def test_table(capsys):
    code, out, _ = run(["table", "--k", "3", "--max-n", "10", "--format", "csv"], capsys)
    rows = out.splitlines()
    assert code == 0 and len(rows) == 10 and rows[-1] == "10,629772754"
    _, out, _ = run(["table", "--k", "3", "--max-n", "1"], capsys)
    assert out == "1,2\n"
    _, out, _ = run(["table", "--k", "2", "--max-n", "3"], capsys)
    assert out == "1,2\n2,6\n3,24\n"
    _, out, _ = run(["table", "--k", "3", "--max-n", "2", "--format", "json"], capsys)
    assert json.loads(out)["terms"] == [[1, 2], [2, 7]]


def test_enumerate(capsys):
    _, out, _ = run(["enumerate", "--n", "2"], capsys)
    lines = out.splitlines()
    assert len(lines) == 7
    assert lines[0] == '{"arcs": [], "n": 2, "resolutions": {}}'
    _, out, _ = run(["enumerate", "--n", "2", "--class", "braid"], capsys)
    expected = [d for d in gen_tangled(2) if classify(d).braid]
    assert [json.loads(x) for x in out.splitlines()] == [d.to_json() for d in expected]
    _, out, _ = run(["enumerate", "--n", "1", "--k", "2"], capsys)
    assert len(out.splitlines()) == 2
    code, _, err = run(["enumerate", "--n", "8"], capsys)
    assert code == 2 and "n <= 6" in err


def test_map_examples(capsys, monkeypatch):
    code, out, _ = run(["map", "--direction", "to-diagram"], capsys,
                       '{"n": 1, "shapes": [[], [1], []]}', monkeypatch)
    assert code == 0
    assert json.loads(out) == {"n": 1, "arcs": [[1, 1]], "resolutions": {}}
    _, out, _ = run(["map", "--direction", "to-tableau"], capsys,
                    '{"n": 2, "arcs": [], "resolutions": {}}', monkeypatch)
    assert json.loads(out) == {"n": 2, "shapes": [[], [], [], [], []]}


@pytest.mark.parametrize("direction, payload, needle", [
    ("to-tableau", '{"n": 2, "arcs": [[1, 1], [1, 2]]}', "degree"),
    ("to-tableau", '{"n": 3, "arcs": [[1, 2], [2, 3]]}', "no resolution"),
    ("to-diagram", '{"n": 1, "shapes": [[], [2], []]}', "elementary move"),
    ("to-diagram", '{"n": 1, "shapes": [[], [1], [1]]}', "must be empty"),
    ("to-diagram", "not json", "valid JSON"),
])
def test_map_rejects_invalid(direction, payload, needle, capsys, monkeypatch):
    code, out, err = run(["map", "--direction", direction], capsys, payload, monkeypatch)
    assert code == 2 and out == "" and needle in err


def test_map_roundtrip_is_identity(capsys, monkeypatch):
    for n in range(5):
        for d in gen_tangled(n):
            text = json.dumps(d.to_json(), sort_keys=True)
            _, tab, _ = run(["map", "--direction", "to-tableau"], capsys, text, monkeypatch)
            _, back, _ = run(["map", "--direction", "to-diagram"], capsys, tab, monkeypatch)
            assert back.strip() == text


@pytest.mark.parametrize("suite, n", [("roundtrip", 3), ("theorem2", 4), ("duality", 4),
                                      ("corollary", 4), ("counts", 5)])
def test_verify_suites_pass(suite, n, capsys):
    code, out, _ = run(["verify", "--suite", suite, "--n", str(n)], capsys)
    assert code == 0
    assert "FAIL" not in out
    if suite == "counts":
        assert "2635, 2635, 2635" in out


def test_verify_reports_failure(capsys, monkeypatch):
    import tangled.verify as v
    from tangled.tangle import TangledDiagram
    monkeypatch.setattr(v, "beta", lambda t: TangledDiagram(9))
    code, out, _ = run(["verify", "--suite", "roundtrip", "--n", "1"], capsys)
    assert code == 1
    assert "FAIL" in out and "counterexample" in out


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "tangled", "count", "--k", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stdout == ""


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "tangled", "enumerate", "--n", "3"]
    a = subprocess.run(argv, capture_output=True).stdout
    b = subprocess.run(argv, capture_output=True).stdout
    assert a == b and a.count(b"\n") == 40
