import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from abid.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_enumerate_c2_text():
    code, out = run("enumerate", "--family", "C", "--rank", "2")
    assert code == 0
    assert out.splitlines()[0] == "C2: 4 abelian ideals"
    assert len(out.splitlines()) == 5


def test_enumerate_json_schema():
    code, out = run("enumerate", "--family", "A", "--rank", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["schema"] == "abid/1"
    assert data["count"] == 8
    assert set(data["ideals"][0]) == {"phi", "antichain", "word", "weight_fw", "eta"}


def test_hasse_dot_matches_golden():
    code, out = run("hasse", "--family", "A", "--rank", "3", "--format", "dot")
    assert code == 0
    assert out == (FIXTURES / "a3_hasse.dot").read_text()
    assert out.count("label=") == 16  # 8 nodes + 8 edges


def test_hasse_json_and_text():
    code, out = run("hasse", "--family", "C", "--rank", "2", "--format", "json")
    assert json.loads(out) == json.loads((FIXTURES / "c2_hasse.json").read_text())
    code, out = run("hasse", "--family", "C", "--rank", "2")
    assert "s0 --1--> s0 s1" in out


@pytest.mark.parametrize(
    "obj,order", [("poset", 2), ("graph", 4), ("dynkin", 1), ("extended", 2), ("center", 2)]
)
def test_aut_c3(obj, order):
    code, out = run("aut", "--family", "C", "--rank", "3", "--object", obj, "--format", "json")
    assert code == 0
    assert json.loads(out)["order"] == order


def test_verify_pass_and_text():
    code, out = run("verify", "--suite", "all", "--max-rank", "4")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True and data["failures"] == 0
    assert {r["suite"] for r in data["rows"]} == {
        "encodings", "theorem-t", "hasse", "words", "edges", "decaut", "young"
    }
    code, out = run("verify", "--suite", "theorem-t", "--max-rank", "3", "--format", "text")
    assert code == 0 and out.rstrip().endswith("checks")


def test_verify_failure_exit_status(monkeypatch):
    import abid.cli as cli

    def fake(suite, max_rank):
        return [{"suite": suite, "case": "A1", "check": "x", "expected": 1, "computed": 2, "pass": False}]

    monkeypatch.setattr(cli, "run_suite", fake)
    code, out = run("verify", "--suite", "encodings", "--max-rank", "1")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_max_rank_env(monkeypatch):
    monkeypatch.setenv("ABID_MAX_RANK", "2")
    code, out = run("verify", "--suite", "edges")
    assert code == 0
    data = json.loads(out)
    assert data["max_rank"] == 2
    assert {r["case"] for r in data["rows"]} == {"A1", "A2", "B2", "C2", "G2"}
    monkeypatch.setenv("ABID_MAX_RANK", "lots")
    assert run("verify", "--suite", "edges")[0] == 2


def test_young_commands():
    code, out = run("young", "--n", "5", "--orbit", "2,1")
    assert code == 0 and out == "(2,1)\n"
    code, out = run("young", "--n", "6", "--orbit", "1")
    assert len(out.splitlines()) == 6
    code, out = run("young", "--n", "5", "--verify")
    assert code == 0 and json.loads(out)["pass"] is True
    code, out = run("young", "--n", "4")
    assert len(out.splitlines()) == 8


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "--family", "D", "--rank", "3"],
        ["enumerate", "--family", "Q", "--rank", "3"],
        ["hasse", "--family", "A"],
        ["young", "--n", "5", "--orbit", "5"],
        ["young", "--n", "5", "--orbit", "a,b"],
        ["young", "--n", "2", "--verify"],
        ["verify", "--max-rank", "0"],
        ["aut", "--family", "A", "--rank", "2", "--object", "nothing"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv, out=io.StringIO()) == 2


def test_output_is_deterministic():
    outs = {run("hasse", "--family", "D", "--rank", "4", "--format", "json")[1] for _ in range(3)}
    assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "abid", "roots", "--family", "G", "--rank", "2"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout.startswith("G2: 6 positive roots")
