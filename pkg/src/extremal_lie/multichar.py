"""Rerun a rational computation in the characteristics where it might differ."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .fields import Field, FieldSpec
from .graphs import SimpleGraph, parse_graph, serialize_graph
from .pipeline import RunResult, run_full

__all__ = ["PrimeReport", "collect_primes", "cross_validate", "run_prime"]

log = logging.getLogger(__name__)

HEURISTIC = ("superset heuristic: odd primes of every rational inverted or cleared during the "
             "rational run, plus 3; not a proof of characteristic independence")


@dataclass
class PrimeReport:
    P1: list
    P2: list
    primes: list = dc_field(default_factory=list)
    note: str = HEURISTIC

    def to_json(self) -> dict:
        return {"P1": self.P1, "P2": self.P2, "primes": self.primes, "note": self.note}


def collect_primes(res: RunResult) -> PrimeReport:
    """P1 from basis and table pivots, P2 from the minimization divisors; 3 always, 2 never."""
    if res.field.p:
        raise ValueError("prime harvest needs a rational run")
    p1 = set(res.p1) - {2}
    p2 = (set(res.cert.primes) if res.cert else set()) - {2}
    return PrimeReport(sorted(p1), sorted(p2), sorted((p1 | p2 | {3}) - {2}))


def run_prime(args) -> dict:
    """One rerun; picklable so it can go to a worker process."""
    graph_text, p, k_cap = args
    g = parse_graph(graph_text)
    try:
        r = run_full(g, Field(FieldSpec("PrimeField", p)), k_cap)
        rep = r.report()
        return {"p": p, "dimL0": rep["dimL0"], "dimX": rep["dimX"], "free": rep["free"]}
    except Exception as exc:  # recorded per prime, not fatal
        return {"p": p, "error": f"{type(exc).__name__}: {exc}"}


def cross_validate(g: SimpleGraph, q_report: dict, primes, jobs: int = 1, k_cap: int = 4) -> dict:
    """Per-prime full reruns diffed against the rational report."""
    tasks = [(serialize_graph(g), p, k_cap) for p in primes]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(run_prime, tasks))
    else:
        rows = [run_prime(t) for t in tasks]
    for row in rows:
        if "error" in row:
            row["match"] = False
            continue
        row["matches"] = {k: row[k] == q_report[k] for k in ("dimL0", "dimX", "free")}
        row["match"] = all(row["matches"].values())
        log.info("p=%d: %s", row["p"], "match" if row["match"] else "differs")
    return {"schema": 1, "kind": "crosscheck", "graph": serialize_graph(g),
            "rational": {k: q_report[k] for k in ("dimL0", "dimX", "free")},
            "perPrime": rows, "allMatch": all(r["match"] for r in rows)}
