import json
import subprocess
import sys

import pytest

from hypdom.cli import main
from hypdom.families import make_F
from hypdom.hgr import emit_hgr


def run(*args):
    p = subprocess.run([sys.executable, "-m", "hypdom", *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


@pytest.fixture
def f_file(tmp_path):
    path = tmp_path / "F.hgr"
    path.write_text(emit_hgr(make_F()))
    return str(path)


def test_solve_f(f_file):
    code, out, _ = run("solve", f_file)
    assert code == 0 and out == "nu=1 gamma=2 tau=2\n"


def test_solve_certificates(f_file, capsys):
    assert main(["solve", f_file, "--certificates"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1:] == ["matching: {1,2,4}", "dominating: {1,2}", "transversal: {1,5}"]
    assert main(["solve", f_file, "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"nu": 1, "gamma": 2, "tau": 2}


def test_recognize_f_both(f_file):
    code, out, _ = run("recognize", f_file, "--mode", "both")
    assert code == 0 and out.startswith("accepted\n")


def test_recognize_json(f_file, capsys):
    assert main(["recognize", f_file, "--json", "--mode", "both"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["accepted"] and (d["nu"], d["gamma"], d["tau"]) == (1, 2, 2)
    assert d["blocks"][0]["kind"] == "F"


def test_recognize_reject_exits_zero(tmp_path, capsys):
    path = tmp_path / "k.hgr"
    path.write_text("p hg 4 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n")
    assert main(["recognize", str(path), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["accepted"] is False


def test_peel_and_contract(f_file, tmp_path, capsys):
    out = tmp_path / "peeled.hgr"
    assert main(["peel", f_file, "-o", str(out)]) == 0
    assert out.read_text().endswith("p hg 6 3\n1 3 6\n2 3 5\n4 5 6\n")
    assert main(["contract", str(out)]) == 0
    text = capsys.readouterr().out
    assert "c labels 3 5 6\n" in text and text.endswith("p hg 3 3\n1 2\n1 3\n2 3\n")


def test_contract_precondition_exit_one(f_file):
    code, _, err = run("contract", f_file)
    assert code == 1 and err.startswith("PreconditionViolated")


def test_generate(tmp_path, capsys):
    assert main(["generate", "f"]) == 0
    assert capsys.readouterr().out == emit_hgr(make_F())
    assert main(["generate", "h3a", "--l", "1", "--entries", "2,1,2"]) == 0
    assert capsys.readouterr().out.startswith("p hg 8 5\n")
    spec = tmp_path / "two.spec"
    spec.write_text("block hhat3 1 1,1,1\nblock hhat3 1 1,1,1\nz1 1 1 2 2 1\n")
    out = tmp_path / "two.hgr"
    assert main(["generate", "g3", "--spec", str(spec), "-o", str(out)]) == 0
    assert out.read_text().startswith("p hg 12 7\n")
    hs = tmp_path / "one.spec"
    hs.write_text("block hhat3 1 1,1,1\nextra1 1 2 3\n")
    assert main(["generate", "hhat3", "--spec", str(hs)]) == 0
    assert capsys.readouterr().out.startswith("p hg 6 4\n")
    assert main(["generate", "random", "--n", "6", "--rank", "3", "--m", "5", "--seed", "1"]) == 0
    first = capsys.readouterr().out
    main(["generate", "random", "--n", "6", "--rank", "3", "--m", "5", "--seed", "1"])
    assert capsys.readouterr().out == first


@pytest.mark.parametrize(
    "args",
    [[], ["frobnicate"], ["solve"], ["generate", "h3a"], ["generate", "random", "--n", "4"],
     ["verify"], ["verify", "--random", "3"], ["recognize", "x", "--mode", "maybe"]],
)
def test_usage_errors_exit_two(args):
    assert run(*args)[0] == 2


def test_computation_errors_exit_one(tmp_path):
    bad = tmp_path / "bad.hgr"
    bad.write_text("p hg 3 2\n1 2 3\n")
    code, _, err = run("solve", str(bad))
    assert code == 1 and err.startswith("CountMismatch")
    bad.write_text("p hg 4 1\n1 2 3\n")
    code, _, err = run("solve", str(bad))
    assert code == 1 and err.startswith("IsolatedVertex")
    code, _, err = run("solve", str(tmp_path / "missing.hgr"))
    assert code == 1 and err.startswith("FileNotFoundError")
    code, _, err = run("generate", "h3a", "--l", "1", "--entries", "1,0,1")
    assert code == 1 and err.startswith("BadProfile")


def test_verify_exhaustive_4():
    code, out, _ = run("verify", "--exhaustive-n", "4")
    assert code == 0
    assert "disagreements=0" in out and "bound_violations=0" in out and "checked=982" in out


def test_verify_random_deterministic():
    a = run("verify", "--random", "40", "--n", "8", "--n-min", "5", "--seed", "3")
    b = run("verify", "--random", "40", "--n", "8", "--n-min", "5", "--seed", "3", "--jobs", "2")
    strip = lambda s: [l for l in s.splitlines() if not l.startswith("wall_time")]
    assert a[0] == b[0] == 0 and strip(a[1]) == strip(b[1])
