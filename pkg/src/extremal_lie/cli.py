"""Command line front end: ``extremal-lie <subcommand> [graph source] [options]``."""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import io
from .analyze import analyze, generic_survey, lower_central_series, specialize, verify_lie
from .fields import CharTwoError, Field, FieldSpec, parse_field
from .graphs import CATALOG, GraphError, catalog_entry, complete_graph, parse_edges, parse_graph, serialize_graph
from .multichar import collect_primes, cross_validate
from .pipeline import build_table, run_full, write_artifacts

__all__ = ["main", "build_parser", "ConfigError"]

log = logging.getLogger("extremal_lie")

COMMANDS = ("basis", "fset", "table", "minimize", "analyze", "survey", "crosscheck", "full", "catalog", "regress")


class ConfigError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--graph", metavar="FILE", help="edge-list file: vertex count, then i-j,i-j,...")
    src.add_argument("--edges", metavar="STR", help="inline 'n:i-j,i-j,...' (n optional)")
    src.add_argument("--complete", metavar="N", type=int, help="complete graph on N vertices")
    src.add_argument("--catalog", metavar="NAME", help="built-in catalog graph")
    common.add_argument("--field", default="q", help="q or gf:p (default q)")
    common.add_argument("--k-cap", type=int, default=4, help="unfolding depth cap for the table")
    common.add_argument("--interleave", choices=("on", "off"), default="off",
                        help="minimize after every table level")
    common.add_argument("--exhaustive", action="store_true", help="exhaustive Jacobi check at any dimension")
    common.add_argument("--trials", type=int, default=20)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--fq", type=int, default=None, metavar="P",
                        help="prime for specialisation and survey (default: the run field, else 101)")
    common.add_argument("--out", metavar="DIR", help="write JSON artifacts here")
    common.add_argument("--include-heavy", action="store_true", help="also run the heaviest catalog graphs")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--max-vertices", type=int, default=5, help="regress: largest catalog graphs to run")
    common.add_argument("--survey", action="store_true", help="regress: also compare the generic quotient")
    common.add_argument("-v", "--verbose", action="count", default=0)
    ap = argparse.ArgumentParser(prog="extremal-lie", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)
    helps = {
        "basis": "monomial basis of the sandwich algebra",
        "fset": "initial f-set",
        "table": "generic multiplication table (before minimization)",
        "minimize": "minimized f-set and certificate",
        "analyze": "specialise at a random point and analyse the algebra",
        "survey": "random specialisations over GF(p): generic radical quotient",
        "crosscheck": "rerun in the harvested characteristics and diff",
        "full": "basis, table, minimization and certificate",
        "catalog": "list the built-in graphs",
        "regress": "run the catalog against the recorded expectations",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return ap


def _graph(args):
    if args.graph:
        return parse_graph(Path(args.graph).read_text())
    if args.edges:
        text = args.edges
        if ":" in text:
            n, text = text.split(":", 1)
            return parse_edges(int(n), text)
        verts = [int(t) for tok in text.split(",") if tok.strip() for t in tok.split("-")]
        return parse_edges(max(verts) + 1, text)
    if args.complete is not None:
        return complete_graph(args.complete)
    if args.catalog:
        return catalog_entry(args.catalog).graph
    raise ConfigError("exactly one graph source is required (--graph, --edges, --complete, --catalog)")


def _spec_field(args, field: Field) -> Field:
    if args.fq is not None:
        return Field(FieldSpec("PrimeField", args.fq), harvesting=False)
    if field.p:
        return field
    return Field(FieldSpec("PrimeField", 101), harvesting=False)


def _emit(doc: dict, args, name: str | None = None) -> None:
    if args.out and name:
        io.dump(doc, Path(args.out) / name)
    print(json.dumps(doc, indent=1, sort_keys=True, default=str, ensure_ascii=False))


def cmd_basis(args, field):
    res = build_table(_graph(args), field, upto="basis")
    if args.out:
        write_artifacts(res, args.out)
    _emit({"dimL0": len(res.basis), "profile": res.basis.profile()}, args)
    return 0


def cmd_fset(args, field):
    res = build_table(_graph(args), field, args.k_cap, args.interleave == "on")
    _emit(res.initial_fset, args, "fset.json")
    return 0


def cmd_table(args, field):
    res = build_table(_graph(args), field, args.k_cap, args.interleave == "on")
    if args.out:
        write_artifacts(res, args.out)
    _emit({"dimL0": len(res.basis), "dimF": len(res.initial_fset["F"]),
           "levels": [vars(s) for s in res.builder.stats]}, args)
    return 0


def cmd_full(args, field):
    res = run_full(_graph(args), field, args.k_cap, args.interleave == "on", args.out)
    _emit(res.report(), args)
    return 0


cmd_minimize = cmd_full


def cmd_analyze(args, field):
    res = run_full(_graph(args), field, args.k_cap, args.interleave == "on", args.out)
    K = _spec_field(args, field)
    rng = random.Random(args.seed)
    values = {v: K.random(rng) for v in res.state.F}
    L = specialize(res.table, res.state, values, K)
    bound = 10**9 if args.exhaustive else 60
    checks = verify_lie(L, res.table, res.state, values, exhaustive_bound=bound, seed=args.seed)
    rep = analyze(L, seed=args.seed, checks=checks)
    rep.update(schema=io.SCHEMA, kind="analysis", field=str(K.spec), seed=args.seed,
               point={res.state.name(v): K.to_str(x) for v, x in values.items()})
    L0 = specialize(res.table, res.state, {v: K.zero for v in res.state.F}, K)
    lcs = lower_central_series(L0)
    rep["sandwichLowerCentralSeries"] = lcs
    rep["sandwichNilpotent"] = lcs[-1] == 0
    _emit(rep, args, "analysis.json")
    return 0


def cmd_survey(args, field):
    res = run_full(_graph(args), field, args.k_cap, args.interleave == "on", args.out)
    K = _spec_field(args, field)
    rep = generic_survey(res.table, res.state, K.p, args.trials, args.seed)
    rep.update(schema=io.SCHEMA, kind="survey")
    _emit(rep, args, "survey.json")
    return 0


def cmd_crosscheck(args, field):
    if field.p:
        raise ConfigError("crosscheck starts from a rational run; use --field q")
    g = _graph(args)
    res = run_full(g, field, args.k_cap, args.interleave == "on", args.out)
    primes = collect_primes(res)
    diff = cross_validate(g, res.report(), primes.primes, args.jobs, args.k_cap)
    diff["primeReport"] = primes.to_json()
    _emit(diff, args, "crosscheck.json")
    return 0 if diff["allMatch"] else 1


def cmd_catalog(args, field):
    rows = []
    for e in CATALOG:
        rows.append({"name": e.name, "n": e.graph.n, "edges": serialize_graph(e.graph).split("\n")[1],
                     "expected": [{"dimX": a, "dimL0": b} for a, b in e.expected],
                     "quotient": [{"dim": a, "type": b} for a, b in e.quotient], "heavy": e.heavy})
    _emit({"schema": io.SCHEMA, "kind": "catalog", "graphs": rows}, args, "catalog.json")
    return 0


def _regress_one(task):
    name, field_text, k_cap, survey, trials, seed = task
    e = catalog_entry(name)
    t = time.perf_counter()
    try:
        res = run_full(e.graph, parse_field(field_text), k_cap)
        rep = res.report()
        got = (rep["dimX"], rep["dimL0"])
        row = {"name": name, "dimX": got[0], "dimL0": got[1], "free": rep["free"],
               "pass": rep["free"] and got in e.expected}
        if survey:
            s = generic_survey(res.table, res.state, 101, trials, seed)
            row["quotient"] = [s["quotientDim"], s["typeLabel"]]
            row["pass"] = row["pass"] and tuple(row["quotient"]) in e.quotient
    except Exception as exc:
        row = {"name": name, "pass": False, "error": f"{type(exc).__name__}: {exc}"}
    row["seconds"] = round(time.perf_counter() - t, 2)
    return row


def cmd_regress(args, field):
    entries = [e for e in CATALOG if e.graph.n <= args.max_vertices and (args.include_heavy or not e.heavy)]
    tasks = [(e.name, str(field.spec), args.k_cap, args.survey, args.trials, args.seed) for e in entries]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            rows = list(ex.map(_regress_one, tasks))
    else:
        rows = []
        for t in tasks:
            rows.append(_regress_one(t))
            log.info("%s: %s", t[0], "pass" if rows[-1]["pass"] else "FAIL")
    ok = all(r["pass"] for r in rows)
    _emit({"schema": io.SCHEMA, "kind": "regress", "field": str(field.spec), "graphs": rows,
           "passed": sum(r["pass"] for r in rows), "total": len(rows), "allPass": ok}, args, "regress.json")
    return 0 if ok else 1


HANDLERS = {name: globals()[f"cmd_{name}"] for name in COMMANDS}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(asctime)s %(name)s %(message)s", stream=sys.stderr)
    try:
        field = parse_field(args.field)
        if args.fq is not None:
            Field(FieldSpec("PrimeField", args.fq))
        return HANDLERS[args.command](args, field)
    except CharTwoError as exc:
        print(f"CharTwoError: {exc}", file=sys.stderr)
        return 2
    except (ConfigError, GraphError, ValueError, KeyError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
