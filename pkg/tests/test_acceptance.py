"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is printed.

Pass --include-heavy (or set EXTREMAL_LIE_HEAVY=1) to run the complete
graph on five vertices in full, and the slowest 5-vertex rows, instead of the
truncated form.
"""
import os
import random
import subprocess
import sys
import time

from conftest import FOUR, LIGHT5, SMALL
from extremal_lie import io
from extremal_lie.analyze import VerificationFailure, generic_survey, lower_central_series, specialize, verify_lie
from extremal_lie.basis import compute_basis
from extremal_lie.cli import COMMANDS
from extremal_lie.fields import Field, FieldSpec, QQ, parse_field
from extremal_lie.graphs import catalog_entry, complete_graph
from extremal_lie.minimize import replay
from extremal_lie.pipeline import run_full, write_artifacts
from oracles import brute_force_algebra

HEAVY = os.environ.get("EXTREMAL_LIE_HEAVY") == "1"
F101 = Field(FieldSpec("PrimeField", 101))
RESULTS: dict = {}
RUNS: dict = {}
# slower 5-vertex rows, a minute or two each; the E7 and heavier rows need --include-heavy
MEDIUM5 = ["G44222", "G43331", "G43322", "G33332"]
HEAVY5 = ["G43333", "G44332"]


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(f"CRITERION {n}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, detail


def _run(name):
    if name not in RUNS:
        t = time.perf_counter()
        RUNS[name] = run_full(catalog_entry(name).graph, QQ())
        RUNS[name].seconds = time.perf_counter() - t
    return RUNS[name]


def _table_rows(names, budget):
    bad, total = [], 0.0
    for name in names:
        r = _run(name)
        total += r.seconds
        rep = r.report()
        got = (rep["dimX"], rep["dimL0"])
        if not (rep["free"] and got in catalog_entry(name).expected):
            bad.append(f"{name}: got {got}, free={rep['free']}")
    ok = not bad and total < budget
    return ok, f"{len(names)} graphs in {total:.2f}s (budget {budget}s)" + (f"; {bad}" if bad else "")


def _first3():
    return SMALL + FOUR + LIGHT5 + MEDIUM5 + (HEAVY5 if HEAVY else [])


def test_criterion_01_two_and_three_vertices():
    record(1, *_table_rows(SMALL, 5))


def test_criterion_02_four_vertices():
    record(2, *_table_rows(FOUR, 120))


def test_criterion_03_five_vertex_rows():
    names = LIGHT5 + MEDIUM5 + (HEAVY5 if HEAVY else [])
    assert "G41111" in names and "G22222" in names  # star and 5-cycle
    record(3, *_table_rows(names, 1800))


def test_criterion_04_complete_graph_on_five():
    g = complete_graph(5)
    if HEAVY:
        detail = []
        ok = True
        for field, dim in (("q", 537), ("gf:3", 538)):
            rep = run_full(g, parse_field(field)).report()
            ok &= (rep["dimL0"], rep["dimX"], rep["free"]) == (dim, 0, True)
            detail.append(f"{field}: dimL0={rep['dimL0']} dimX={rep['dimX']} free={rep['free']}")
        record(4, ok, "; ".join(detail))
        return
    # truncated form: all lengths <= 8, partial sums within the known totals
    out = []
    ok = True
    for field, bound in (("q", 537), ("gf:3", 538)):
        B = compute_basis(g, parse_field(field), max_length=8)
        prof = B.profile()
        sums = [sum(prof[: i + 1]) for i in range(len(prof))]
        ok &= len(prof) == 8 and prof == sorted(prof) and sums[-1] <= bound
        out.append(f"{field}: lengths 1..8 = {prof}")
    record(4, ok, "(downgraded, --include-heavy for the full run) " + "; ".join(out))


def test_criterion_05_sandwich_nilpotency():
    bad = []
    names = SMALL + FOUR + LIGHT5
    for name in names:
        r = _run(name)
        vals = {v: 0 for v in r.state.F}
        lcs = lower_central_series(specialize(r.table, r.state, vals, F101))
        if lcs[-1] != 0 or len(lcs) > len(r.basis) + 1:
            bad.append(name)
    record(5, not bad, f"{len(names)} graphs" + (f"; not nilpotent: {bad}" if bad else ""))


def test_criterion_06_brute_force_oracle():
    t = time.perf_counter()
    bad = []
    for name in SMALL:
        r = _run(name)
        B = r.basis
        rng = random.Random(2024)
        for trial in range(50):
            vals = {v: F101.random(rng) for v in r.state.F}
            L = specialize(r.table, r.state, vals, F101)
            fv = {(x, i): int(r.state.value(x, i).evaluate(vals, F101)) for x in range(B.n) for i in range(len(B))}
            S = brute_force_algebra(B.n, B.graph.edges, B.words, fv, 101)
            if not all((S[(x, i)] % 101 == L.ad[x][:, i] % 101).all() for x in range(B.n) for i in range(len(B))):
                bad.append((name, trial))
    dt = time.perf_counter() - t
    record(6, not bad and dt < 60, f"150 specialisations over GF(101) in {dt:.1f}s" + (f"; mismatches {bad}" if bad else ""))


def test_criterion_07_verification_suite():
    bad = []
    names = _first3()
    for name in names:
        r = _run(name)
        rng = random.Random(7)
        for _ in range(2):
            vals = {v: F101.random(rng) for v in r.state.F}
            try:
                verify_lie(specialize(r.table, r.state, vals, F101), r.table, r.state, vals)
            except VerificationFailure as exc:
                bad.append(f"{name}: {exc}")
    record(7, not bad, f"{2 * len(names)} algebras" + (f"; {bad}" if bad else ""))


def test_criterion_08_generic_survey():
    t = time.perf_counter()
    cases = [("G211", 17, (3, "A1")), ("G222", 101, (8, "A2")), ("G3333", 101, (28, "D4"))]
    out, ok = [], True
    for name, p, want in cases:
        r = _run(name)
        rep = generic_survey(r.table, r.state, p, trials=20, seed=12345)
        got = (rep["quotientDim"], rep["typeLabel"])
        ok &= got == want and rep["frequency"] >= 0.8
        out.append(f"{name}/GF({p}): {got} at {rep['frequency']:.0%}")
    dt = time.perf_counter() - t
    record(8, ok and dt < 120, "; ".join(out) + f" in {dt:.1f}s")


def test_criterion_09_certificate_replay(tmp_path):
    bad = []
    names = _first3()
    for name in names:
        r = _run(name)
        d = tmp_path / name
        write_artifacts(r, d)
        B = io.basis_from_json(io.load(d / "basis.json"))
        cert = io.certificate_from_json(io.load(d / "certificate.json"), B, r.field)
        pre = io.table_from_json(io.load(d / "table_pre.json"), B, r.field)
        out = io.table_to_json(replay(cert, pre))
        if out != io.load(d / "table.json"):
            bad.append(name)
    record(9, not bad, f"{len(names)} certificates" + (f"; mismatched: {bad}" if bad else ""))


def test_criterion_10_char_two_rejected():
    bad = []
    for cmd in COMMANDS:
        out = subprocess.run([sys.executable, "-m", "extremal_lie", cmd, "--complete", "2", "--field", "gf:2"],
                             capture_output=True, text=True)
        if out.returncode == 0 or "CharTwoError" not in out.stderr:
            bad.append(cmd)
    record(10, not bad, f"{len(COMMANDS)} subcommands" + (f"; accepted: {bad}" if bad else ""))
