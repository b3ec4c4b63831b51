"""End-to-end runs: basis, table with the initial f-set, minimization, certificate."""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from . import io
from .basis import MonomialBasis, compute_basis
from .fields import Field
from .fset import FSetState
from .graphs import SimpleGraph, serialize_graph
from .minimize import Certificate, InterleavedMinimizer, certify_affine, minimize_fset
from .table import MultTable, TableBuilder, compute_mult_table

__all__ = ["RunResult", "build_table", "run_full", "write_artifacts"]

log = logging.getLogger(__name__)


@dataclass
class RunResult:
    graph: SimpleGraph
    field: Field
    basis: MonomialBasis
    builder: TableBuilder | None = None
    initial_fset: dict | None = None  # JSON of the f-set before minimization
    pre_table: dict | None = None  # JSON of the table before minimization
    cert: Certificate | None = None
    timings: dict = dc_field(default_factory=dict)
    p1: list = dc_field(default_factory=list)

    @property
    def state(self) -> FSetState:
        return self.builder.state

    @property
    def table(self) -> MultTable:
        return self.builder.table

    def report(self) -> dict:
        doc = {"schema": io.SCHEMA, "kind": "report", "graph": serialize_graph(self.graph),
               "field": str(self.field.spec), "dimL0": len(self.basis), "profile": self.basis.profile()}
        if self.builder is not None:
            doc["levels"] = [vars(s) for s in self.builder.stats]
            doc["dimF_initial"] = len(self.initial_fset["F"]) if self.initial_fset else None
        if self.cert is not None:
            aff = certify_affine(self.cert, self.state)
            doc.update(dimX=aff["dimX"], free=aff["free"], statement=aff["statement"],
                       eliminations=len(self.cert.steps))
            if not self.field.p:
                doc["primes"] = {"P1": self.p1, "P2": sorted(self.cert.primes)}
        doc["timings"] = {k: round(v, 3) for k, v in self.timings.items()}
        doc["wall"] = round(sum(self.timings.values()), 3)
        return doc


def _timed(res: RunResult, stage: str, fn):
    t = time.perf_counter()
    out = fn()
    res.timings[stage] = time.perf_counter() - t
    log.info("%s done in %.2fs", stage, res.timings[stage])
    return out


def build_table(g: SimpleGraph, field: Field, k_cap: int = 4, interleave: bool = False,
                upto: str = "table") -> RunResult:
    """Run up to ``upto`` in {"basis", "table", "minimize"}."""
    res = RunResult(g, field, None)
    res.basis = _timed(res, "basis", lambda: compute_basis(g, field))
    if upto == "basis":
        return res
    hook = InterleavedMinimizer() if interleave else None
    res.builder = _timed(res, "table", lambda: compute_mult_table(res.basis, field, k_cap, hook))
    res.p1 = sorted(field.harvested - {2})
    res.initial_fset = io.fset_to_json(res.builder.state)
    res.pre_table = io.table_to_json(res.builder.table)
    if upto == "table":
        return res

    def minimize():
        b = res.builder
        if hook is not None:
            return hook.finish(b)
        cert = minimize_fset(b.state, b.table, b.relations) if b.relations else None
        return minimize_fset(b.state, b.table, cert=cert)

    res.cert = _timed(res, "minimize", minimize)
    return res


def run_full(g: SimpleGraph, field: Field, k_cap: int = 4, interleave: bool = False, out=None) -> RunResult:
    res = build_table(g, field, k_cap, interleave, upto="minimize")
    if out is not None:
        write_artifacts(res, out)
    return res


def write_artifacts(res: RunResult, out) -> None:
    out = Path(out)
    io.dump(io.basis_to_json(res.basis, res.field), out / "basis.json")
    if res.builder is None:
        return
    io.dump(res.pre_table, out / "table_pre.json")
    if res.cert is None:
        io.dump(res.initial_fset, out / "fset.json")
        io.dump(res.pre_table, out / "table.json")
        return
    io.dump(res.initial_fset, out / "fset_initial.json")
    io.dump(io.fset_to_json(res.state), out / "fset.json")
    io.dump(io.table_to_json(res.table), out / "table.json")
    io.dump(io.certificate_to_json(res.cert, res.state, certify_affine(res.cert, res.state)),
            out / "certificate.json")
    io.dump(res.report(), out / "report.json")
