import csv
import json

import pytest

from taunak import cli
from taunak.cubes import Report


def call(capsys, *argv):
    code = cli.run(list(argv))
    return code, capsys.readouterr().out


def test_enumerate_a3(capsys):
    code, out = call(capsys, "--n", "3", "--kupisch", "3,2,1", "smc", "enumerate")
    assert code == 0
    patterns = json.loads(out)
    assert len(patterns) == 14
    assert all(len(p["green"]) + len(p["red"]) == 3 for p in patterns)


def test_counterexample_not_completable(capsys):
    code, out = call(capsys, "--n", "3", "--kupisch", "2,2,2", "smc", "check",
                     "--positive", "M(1,2)", "--negative", "M(2,2)")
    assert code == 0
    data = json.loads(out)
    assert data["semibrick_pair"] and not data["mutation_compatible"] and data["completable"] is False


def test_completion_reported(capsys):
    code, out = call(capsys, "--n", "3", "--kupisch", "3,2,1", "smc", "check", "--positive", "M(1,1)")
    data = json.loads(out)
    assert code == 0 and data["completable"] and "completion" in data


def test_check_cat0(capsys):
    code, out = call(capsys, "--n", "4", "--kupisch", "3,3,3,3", "complex", "check-cat0")
    assert code == 0 and json.loads(out) == {"flag": True}


def test_global_options_after_verb(capsys):
    code, out = call(capsys, "info", "--n", "2", "--kupisch", "2,1")
    assert code == 0 and json.loads(out)["support_tau_tilting_pairs"] == 5


def test_algebra_file(tmp_path, capsys):
    f = tmp_path / "a.json"
    f.write_text(json.dumps({"n": 2, "kupisch": [2, 1]}))
    code, out = call(capsys, "--algebra", str(f), "bricks")
    assert code == 0 and json.loads(out) == ["M(1,1)", "M(1,2)", "M(2,1)"]


@pytest.mark.parametrize("argv", [
    ["bricks"],
    ["--n", "2", "--kupisch", "1,1", "bricks"],
    ["--n", "2", "--kupisch", "x", "bricks"],
    ["--n", "2", "--kupisch", "2,1", "frobnicate"],
    ["--n", "2", "--kupisch", "2,1", "smc", "mutate", "--positive", "M(1,1) M(2,1)"],
    ["--n", "2", "--kupisch", "2,1", "smc", "check", "--positive", "M(7,1)"],
    ["--n", "2", "--kupisch", "2,1", "verify"],
    ["--n", "2", "--kupisch", "2,1", "report"],
    ["--algebra", "/nonexistent.json", "bricks"],
])
def test_input_errors_exit_one(argv, capsys):
    assert cli.run(argv) == 1


def test_verification_failure_exits_two(monkeypatch, capsys):
    bad = Report("always fails")
    bad.fail("forced")
    monkeypatch.setattr(cli, "run_all", lambda spec, only=None: [bad])
    code, out = call(capsys, "--n", "2", "--kupisch", "2,1", "verify", "--all")
    assert code == 2 and json.loads(out)["passed"] is False


def test_mutate(capsys):
    code, out = call(capsys, "--n", "2", "--kupisch", "2,1", "smc", "mutate",
                     "--positive", "M(1,1) M(2,1)", "--at", "M(2,1)")
    assert code == 0
    assert json.loads(out) == {"positive": ["M(1,2)"], "negative": ["M(2,1)"]}
    code, out = call(capsys, "--n", "2", "--kupisch", "2,1", "smc", "mutate", "--right",
                     "--positive", "M(1,2)", "--negative", "M(2,1)", "--at", "M(2,1)")
    assert code == 0 and json.loads(out) == {"positive": ["M(1,1)", "M(2,1)"], "negative": []}


@pytest.mark.parametrize("argv,check", [
    (["tors", "mgs"], lambda d: len(d) == 2),
    (["tors", "polygons"], lambda d: len(d) == 1),
    (["tors", "hasse"], lambda d: len(d["vertices"]) == 5),
    (["stt", "graph"], lambda d: d["regular"] and len(d["vertices"]) == 5),
    (["arcs"], lambda d: len(d) == 3),
    (["group", "present", "--style", "coset"], lambda d: len(d["relations"]) == 6),
    (["group", "verify"], lambda d: d["passed"]),
    (["complex", "build"], lambda d: d["cubes_by_rank"] == [5, 11, 5] and d["flag"]),
    (["complex", "check-cubical"], lambda d: d["passed"]),
    (["verify", "--check", "census", "--check", "flag"], lambda d: d["passed"] and len(d["checks"]) == 2),
])
def test_json_verbs(argv, check, capsys):
    code, out = call(capsys, "--n", "2", "--kupisch", "2,1", *argv)
    assert code == 0 and check(json.loads(out))


@pytest.mark.parametrize("argv,marker", [
    (["--format", "dot", "tors", "hasse"], "digraph"),
    (["--format", "dot", "complex", "build"], "digraph"),
    (["--format", "tikz", "smc", "enumerate"], "tikzpicture"),
    (["--format", "text", "group", "present"], "X[M(1,1)]"),
    (["--format", "text", "verify", "--all"], "PASS"),
])
def test_other_formats(argv, marker, capsys):
    code, out = call(capsys, "--n", "2", "--kupisch", "2,1", *argv)
    assert code == 0 and marker in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "p.json"
    code, out = call(capsys, "--n", "2", "--kupisch", "2,1", "--out", str(target), "group", "present")
    assert code == 0 and out == ""
    assert len(json.loads(target.read_text())["generators"]) == 3


def test_report(tmp_path, capsys):
    code, out = call(capsys, "--n", "3", "--kupisch", "3,2,1", "--out", str(tmp_path), "report")
    assert code == 0 and json.loads(out)["passed"]
    for name in ("arc_patterns.png", "hasse.png", "smcs.tsv", "hasse.dot", "presentation.json",
                 "complex.json", "verify.tsv"):
        assert (tmp_path / name).stat().st_size > 0
    assert (tmp_path / "hasse.png").read_bytes()[:4] == b"\x89PNG"
    with open(tmp_path / "smcs.tsv") as fh:
        rows = list(csv.DictReader(fh, delimiter="\t"))
    assert len(rows) == 14
    with open(tmp_path / "verify.tsv") as fh:
        assert all(r["passed"] == "True" for r in csv.DictReader(fh, delimiter="\t"))
