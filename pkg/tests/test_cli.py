from __future__ import annotations

import json
import subprocess
import sys
from importlib import resources

import pytest

from sl3spider.cli import main, parse_colors

DATA = resources.files("sl3spider").joinpath("data")


def path(kind: str, name: str) -> str:
    return str(DATA.joinpath(kind).joinpath(f"{name}.json"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_parse_colors():
    assert parse_colors("1,1;2,0") == [(1, 1), (2, 0)]
    assert parse_colors(" 3,0 ") == [(3, 0)]
    for bad in ["", "1", "1,2,3", "a,b", "-1,0"]:
        with pytest.raises(ValueError):
            parse_colors(bad)


@pytest.mark.parametrize("name,value", [("circle", "q^2 + 1 + q^-2"), ("theta", "q^3 + 2*q + 2*q^-1 + q^-3"),
                                        ("empty", "1")])
def test_eval_web(capsys, name, value):
    assert run(capsys, "eval-web", path("webs", name)) == (0, value, "")


def test_eval_web_json(capsys):
    code, out, _ = run(capsys, "eval-web", path("webs", "theta"), "--format", "json")
    assert code == 0
    assert json.loads(out)["value"] == "q^3 + 2*q + 2*q^-1 + q^-3"


def test_bracket_and_euler_agree(capsys):
    trefoil = path("diagrams", "trefoil")
    _, br, _ = run(capsys, "bracket", trefoil)
    code, out, _ = run(capsys, "euler", trefoil, "--format", "json")
    assert code == 0
    assert json.loads(out)["value"] == br == "-q^6 - q^4 + 1 + 2*q^-2 + q^-4 + q^-6"


def test_euler_csv(capsys):
    code, out, _ = run(capsys, "euler", path("diagrams", "trefoil"), "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "degree,graded_rank"
    assert [ln.split(",")[0] for ln in lines[1:]] == ["-2", "-1", "0", "1"]


def test_colored_unknot(capsys):
    code, out, _ = run(capsys, "colored", path("diagrams", "unknot"), "--colors", "1,1")
    assert (code, out) == (0, "q^4 + 2*q^2 + 2 + 2*q^-2 + q^-4")


def test_colored_euler_pass_and_fail(capsys):
    code, out, _ = run(capsys, "colored-euler", path("diagrams", "trefoil"), "--colors", "2,0", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["identity"] == "pass" and rec["chi"] == rec["invariant"]
    code, out, _ = run(capsys, "colored-euler", path("diagrams", "kink_pos"), "--colors", "2,0")
    assert code == 1
    assert "chi = phase * invariant: FAIL" in out


def test_resolution(capsys):
    code, out, _ = run(capsys, "resolution", "3", "2", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["dims"] == [243, 270, 72, 3]
    assert rec["cohomology"] == [42, 0, 0, 0] and rec["certified"]


def test_gamma_dot_and_counts(capsys):
    code, out, _ = run(capsys, "gamma", "3", "2", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and (rec["vertices"], rec["edges"]) == (10, 15)
    code, out, _ = run(capsys, "gamma", "2", "0", "--dot")
    assert code == 0 and out.startswith("digraph") and out.count("->") == 1


def test_dot_only_for_gamma(capsys):
    code, _, err = run(capsys, "eval-web", path("webs", "circle"), "--format", "dot")
    assert code == 2 and err.startswith("error:")


def test_errors_exit_2(capsys):
    assert run(capsys, "bracket", "no_such_file.json")[0] == 2
    assert run(capsys, "colored", path("diagrams", "hopf"), "--colors", "1,0")[0] == 2
    assert run(capsys, "bracket", path("diagrams", "cinquefoil"), "--cap-crossings", "3")[0] == 2


def test_thread_count_does_not_change_output(monkeypatch, capsys):
    argv = ["colored-euler", path("diagrams", "hopf"), "--colors", "1,1;1,1", "--format", "json"]
    outs = []
    for threads in ("1", "2", "2"):
        monkeypatch.setenv("SPIDER_THREADS", threads)
        outs.append(run(capsys, *argv))
    assert outs[0] == outs[1] == outs[2]
    assert outs[0][0] == 0


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "sl3spider", "eval-web", path("webs", "circle")],
                         capture_output=True, text=True, check=True)
    assert res.stdout.strip() == "q^2 + 1 + q^-2"
