import json
import subprocess
import sys

import pytest

from flagorbits.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def js(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_orbits_count(capsys):
    code, data = js(capsys, "orbits", "count", "--family", "A", "--n", "5", "--r", "2")
    assert code == 0
    assert data == {"count": 60, "components": 5, "factor": 12, "identity_holds": True}


def test_tableau_to_w(capsys):
    code, data = js(capsys, "tableau", "to-w", "--n", "5", "--cols", "2 4")
    assert code == 0 and data["w"] == "3 1 4 2 5" and data["separated"] is True
    assert data["dims"] == [1, 3]


def test_pretty_goes_to_stderr(capsys):
    code, out, err = run(capsys, "tableau", "to-w", "--n", "5", "--cols", "2 4", "--pretty")
    assert "5 4" in err and json.loads(out)["q"] == [3, 5]


def test_weyl_len(capsys):
    code, data = js(capsys, "weyl", "len", "--family", "D", "--n", "6", "--perm", "6 5 3 4 2 1")
    assert code == 0 and data["inversions"] == 14 and data["length"] == 6


def test_tsv_matches_json(capsys):
    args = ["chars", "dominance", "--family", "B", "--n", "7", "--r", "2"]
    _, data = js(capsys, *args)
    code, out, _ = run(capsys, *args, "--format", "tsv")
    rows = dict(line.split("\t") for line in out.strip().splitlines())
    assert json.loads(rows["weight"]) == data["weight"] == [1]
    assert rows["dominant"] == "true"


def test_counterexample(capsys):
    code, data = js(capsys, "counterexample")
    assert code == 0
    assert data["family_phi"] == ["f1", "f2"] and data["phi_limit"] == ["f1", "f3"]
    assert data["limit_flag_equal"] and data["discontinuous"]


def test_verify_dim_formula(capsys):
    code, data = js(capsys, "verify", "dim-formula", "--family", "A", "--n", "4", "--r", "1",
                    "--exhaustive")
    assert code == 0 and data["total"] == data["passed"] == 24


def test_resolve_one(capsys):
    code, data = js(capsys, "resolve", "--family", "D", "--n", "6", "--r", "2", "--v", "6 5 3 4 2 1")
    assert code == 0 and all(data["hypotheses"].values())


def test_resolve_exhaustive_threads_agree(capsys):
    base = ["resolve", "exhaustive", "--family", "A", "--n", "4", "--r", "1"]
    _, one = js(capsys, *base)
    _, two = js(capsys, *base, "--threads", "2")
    assert one == two and one["passed"] == 24


def test_models_lie_dim_fields(capsys):
    base = ["models", "lie-dim", "--family", "D", "--n", "6", "--r", "2"]
    _, q = js(capsys, *base)
    _, f = js(capsys, *base, "--field", "fp", "--p", "5")
    assert [r["dim"] for r in q["rows"]] == [r["dim"] for r in f["rows"]]


def test_models_chi_and_dickson(capsys):
    _, data = js(capsys, "models", "chi", "--matrix", "[[0,0,1,0],[0,0,0,1],[0,0,0,0],[0,0,0,0]]")
    assert data["chi"] == [0, 1, 1]
    _, data = js(capsys, "models", "dickson", "--matrix",
                 "[[0,0,0,1],[0,1,0,0],[0,0,1,0],[1,0,0,0]]")
    assert data["dickson"] == 1


@pytest.mark.parametrize("argv,msg", [
    (["weyl", "len", "--family", "X", "--n", "4", "--perm", "1 2 3 4"], "unknown family"),
    (["weyl", "len", "--family", "A", "--n", "4", "--perm", "1 2 x 4"], "malformed permutation"),
    (["weyl", "len", "--family", "D", "--n", "4", "--perm", "2 1 3 4"], "not in W"),
    (["chars", "dominance", "--family", "C", "--n", "6", "--r", "2"], "odd r"),
    (["models", "lie-dim", "--family", "A", "--n", "3", "--r", "1", "--field", "fp"], "--p"),
    (["models", "lie-dim", "--family", "A", "--n", "3", "--r", "1", "--field", "fp", "--p", "4"],
     "prime"),
])
def test_usage_errors(capsys, argv, msg):
    code, out, err = run(capsys, *argv)
    assert code == 2 and msg in err and out == ""


def test_argparse_errors_exit_2(capsys):
    assert main(["weyl"]) == 2
    assert main(["nonsense"]) == 2


def test_failed_verification_exits_1(capsys, monkeypatch):
    from flagorbits import resolve
    monkeypatch.setattr(resolve, "formula_codim", lambda w, s: -1)
    code, data = js(capsys, "verify", "dim-formula", "--family", "A", "--n", "3", "--r", "1",
                    "--perm", "1 2 3")
    assert code == 1 and data["passed"] == 0


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "flagorbits", "chars", "dominance", "--family", "C",
                          "--n", "6", "--r", "3"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout) == {"weight": [-1], "dominant": False}
