import json
import subprocess
import sys

import pytest

from conftest import pipeline
from extremal_lie import io
from extremal_lie.cli import COMMANDS, main
from extremal_lie.fields import QQ
from extremal_lie.multichar import collect_primes, cross_validate

Q = QQ()


@pytest.mark.parametrize("name", ["G222", "G33222-house"])
def test_json_round_trips(name):
    r = pipeline(name)
    bj = io.basis_to_json(r.basis, Q)
    B = io.basis_from_json(json.loads(json.dumps(bj)))
    assert io.basis_to_json(B, Q) == bj
    fj = io.fset_to_json(r.state)
    assert io.fset_to_json(io.fset_from_json(fj, B, Q)) == fj
    tj = io.table_to_json(r.table)
    assert io.table_to_json(io.table_from_json(tj, B, Q)) == tj
    cj = io.certificate_to_json(r.cert, r.state)
    assert io.certificate_to_json(io.certificate_from_json(cj, B, Q), r.state) == cj


def test_schema_checked():
    with pytest.raises(io.SchemaError):
        io.basis_from_json({"schema": 99, "kind": "basis"})


@pytest.mark.parametrize("cmd", COMMANDS)
def test_char_two_rejected_everywhere(cmd, capsys):
    assert main([cmd, "--complete", "2", "--field", "gf:2"]) != 0
    assert "CharTwoError" in capsys.readouterr().err


def test_char_two_rejected_by_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "extremal_lie", "full", "--complete", "2", "--field", "gf:2"],
                         capture_output=True, text=True)
    assert out.returncode != 0 and "CharTwoError" in out.stderr


def test_full_k2(capsys):
    assert main(["full", "--complete", "2"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert (rep["dimL0"], rep["dimX"], rep["free"]) == (3, 1, True)


def test_full_writes_identical_artifacts(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        assert main(["full", "--edges", "0-1,1-2,2-3", "--out", str(d)]) == 0
    capsys.readouterr()
    names = sorted(p.name for p in a.iterdir())
    assert names == ["basis.json", "certificate.json", "fset.json", "fset_initial.json", "report.json",
                     "table.json", "table_pre.json"]
    for n in names:
        da, db = io.load(a / n), io.load(b / n)
        if n == "report.json":
            for d in (da, db):
                d.pop("timings"), d.pop("wall")
        assert da == db


def test_missing_graph_source(capsys):
    assert main(["full"]) != 0
    assert "graph source" in capsys.readouterr().err


def test_catalog_listing(capsys):
    assert main(["catalog"]) == 0
    rows = json.loads(capsys.readouterr().out)["graphs"]
    assert [sum(r["n"] == n for r in rows) for n in (2, 3, 4, 5)] == [1, 2, 6, 21]
    assert all(r["expected"] for r in rows)


def test_regress_small(capsys):
    assert main(["regress", "--max-vertices", "3"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["total"] == 3 and rep["allPass"]


def test_analyze_and_survey_commands(capsys):
    assert main(["analyze", "--complete", "3", "--fq", "101", "--seed", "4"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["checksPassed"] and rep["sandwichNilpotent"]
    assert main(["survey", "--complete", "3", "--trials", "5"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert (rep["quotientDim"], rep["typeLabel"]) == (8, "A2")


def test_primes_for_k2():
    rep = collect_primes(pipeline("G11"))
    assert rep.primes == [3] and 2 not in rep.primes


@pytest.mark.parametrize("name,p", [("G3333", 5), ("G222", 7), ("G211", 3)])
def test_cross_validate_matches(name, p):
    r = pipeline(name)
    diff = cross_validate(r.graph, r.report(), [p])
    assert diff["allMatch"], diff


def test_crosscheck_command(capsys):
    assert main(["crosscheck", "--complete", "2", "--jobs", "2"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert [row["p"] for row in rep["perPrime"]] == [3]
