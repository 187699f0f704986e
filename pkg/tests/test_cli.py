import json
import subprocess
import sys

import pytest

from chromcore.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_cycle(capsys):
    code, out, _ = run(["gen", "cycle:5"], capsys)
    assert code == 0 and out == "Dhc\n"


def test_core_odd_cycle(capsys):
    code, out, _ = run(["core", "cycle:7"], capsys)
    cert = json.loads(out)
    assert code == 0 and cert["si"] == 14 and cert["vertices"] == list(range(7))


def test_core_all_and_oracle_agree(capsys):
    _, a, _ = run(["core", "petersen:", "--all"], capsys)
    _, b, _ = run(["core", "petersen:", "--all", "--oracle"], capsys)
    fa, fb = json.loads(a), json.loads(b)
    assert [c["vertices"] for c in fa] == [c["vertices"] for c in fb]
    assert {c["minimality"] for c in fb} == {"oracle_verified"}


def test_chi_graph6_and_edge_list(capsys, tmp_path):
    code, out, _ = run(["chi", "C~"], capsys)
    assert code == 0 and json.loads(out)["chi"] == 4
    f = tmp_path / "g.txt"
    f.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n")
    code, out, _ = run(["chi", str(f)], capsys)
    assert json.loads(out)["chi"] == 3


def test_verify_pass(capsys):
    code, out, _ = run(["verify", "prop-2.2-v"], capsys)
    report = json.loads(out)
    assert code == 0 and report["passes"] == 4 and report["runtime_ms"] is None


def test_verify_counterexample_exit(capsys):
    code, out, _ = run(["verify", "prop-complement-existence", "--limit", "order=3"], capsys)
    assert code == 1 and json.loads(out)["counterexamples"]


def test_verify_byte_identical(capsys):
    _, a, _ = run(["verify", "thm-line-tree", "--seed", "3"], capsys)
    _, b, _ = run(["verify", "thm-line-tree", "--seed", "3"], capsys)
    assert a == b
    _, c, _ = run(["verify", "thm-line-tree", "--seed", "3", "--timing"], capsys)
    assert json.loads(c)["runtime_ms"] is not None


@pytest.mark.parametrize("argv", [
    ["bogus"], ["core"], ["core", "C5", "--frobnicate"], ["verify", "nope"], ["gen", "cycle:2"],
    ["chi", "C"], ["verify", "prop-2.2-v", "--limit", "depth=3"], ["verify", "prop-2.2-v", "--limit", "order=x"],
])
def test_input_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and err


def test_capability_exit(capsys, monkeypatch):
    monkeypatch.setenv("CHROMCORE_SEARCH_LIMIT", "10")
    code, _, err = run(["core", "helm:7"], capsys)
    assert code == 3 and "best_si" in err


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chromcore.cli", "gen", "complete:4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "C~\n"
