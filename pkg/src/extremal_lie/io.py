"""JSON artifacts: basis, f-set, table, certificate and report.

Every document carries ``schema`` and ``kind``; polynomials are written with
:meth:`FPoly.to_str`, whose term order is fixed, so equal objects give equal
text.
"""
from __future__ import annotations

import json
from pathlib import Path

from .basis import MonomialBasis
from .fields import Field, parse_field
from .fset import FSetState
from .graphs import parse_graph, serialize_graph
from .minimize import Certificate, Step
from .polys import FPoly
from .table import MultTable

__all__ = [
    "SCHEMA",
    "SchemaError",
    "basis_to_json",
    "basis_from_json",
    "fset_to_json",
    "fset_from_json",
    "table_to_json",
    "table_from_json",
    "certificate_to_json",
    "certificate_from_json",
    "dump",
    "load",
]

SCHEMA = 1


class SchemaError(ValueError):
    pass


def _head(kind: str, field: Field) -> dict:
    return {"schema": SCHEMA, "kind": kind, "field": str(field.spec)}


def _check(doc: dict, kind: str) -> None:
    if doc.get("schema") != SCHEMA or doc.get("kind") != kind:
        raise SchemaError(f"expected {kind} document of schema {SCHEMA}, got {doc.get('kind')}/{doc.get('schema')}")


def _name(n: int):
    return lambda v: f"f[{v % n}][{v // n}]"


def _vec_to_json(vec: dict, name) -> list:
    return [[c, p.to_str(name)] for c, p in sorted(vec.items())]


def _vec_from_json(rows, field, var_id) -> dict:
    out = {}
    for c, text in rows:
        p = FPoly.parse(field, text, var_id)
        if p:
            out[int(c)] = p
    return out


# basis ------------------------------------------------------------------


def basis_to_json(B: MonomialBasis, field: Field) -> dict:
    doc = _head("basis", field)
    doc.update(
        graph=serialize_graph(B.graph),
        dim=len(B),
        profile=B.profile(),
        words=[list(w) for w in B.words],
        parent=[None if p is None else list(p) for p in B.parent],
        graded=[[x, b, [[c, field.to_str(v)] for c, v in sorted(vec.items())]]
                for (x, b), vec in sorted(B.graded.items())],
        quotient_dims=list(B.quotient_dims),
    )
    return doc


def basis_from_json(doc: dict, field: Field | None = None) -> MonomialBasis:
    _check(doc, "basis")
    field = field or parse_field(doc["field"])
    g = parse_graph(doc["graph"])
    graded = {(x, b): {int(c): field(v) for c, v in vec} for x, b, vec in doc["graded"]}
    return MonomialBasis(g, [tuple(w) for w in doc["words"]],
                         [None if p is None else tuple(p) for p in doc["parent"]],
                         graded, list(doc["quotient_dims"]))


# f-set ------------------------------------------------------------------


def fset_to_json(state: FSetState) -> dict:
    doc = _head("fset", state.field)
    name = state.name
    doc.update(
        F=[name(v) for v in state.F],
        dimX_upper=len(state.F),
        r=[[name(v), p.to_str(name), state.source.get(v, "")] for v, p in sorted(state.r.items())],
    )
    return doc


def fset_from_json(doc: dict, basis: MonomialBasis, field: Field) -> FSetState:
    _check(doc, "fset")
    s = FSetState(basis, field)
    s.F = sorted(s.parse_name(t) for t in doc["F"])
    for tok, text, src in doc["r"]:
        v = s.parse_name(tok)
        s.r[v] = FPoly.parse(field, text, s.parse_name)
        s.source[v] = src
    return s


# table ------------------------------------------------------------------


def table_to_json(table: MultTable) -> dict:
    doc = _head("table", table.field)
    name = _name(table.basis.n)
    doc.update(
        dim=len(table.basis),
        entries=[[x, b, _vec_to_json(vec, name)] for (x, b), vec in sorted(table.entries.items())],
    )
    return doc


def table_from_json(doc: dict, basis: MonomialBasis, field: Field) -> MultTable:
    _check(doc, "table")
    s = FSetState(basis, field)
    entries = {(x, b): _vec_from_json(rows, field, s.parse_name) for x, b, rows in doc["entries"]}
    return MultTable(basis, field, entries)


# certificate ------------------------------------------------------------


def certificate_to_json(cert: Certificate, state: FSetState, statement: dict | None = None) -> dict:
    doc = _head("certificate", state.field)
    name = state.name
    doc.update(
        free=cert.free,
        steps=[{"var": name(st.var), "expr": st.expr.to_str(name), "source": st.source} for st in cert.steps],
        residual=[[tag, _vec_to_json(vec, name)] for tag, vec in cert.residual],
        alpha_primes=sorted(cert.primes),
    )
    if statement is not None:
        doc["statement"] = statement
    return doc


def certificate_from_json(doc: dict, basis: MonomialBasis, field: Field) -> Certificate:
    _check(doc, "certificate")
    s = FSetState(basis, field)
    steps = [Step(s.parse_name(st["var"]), FPoly.parse(field, st["expr"], s.parse_name), st["source"])
             for st in doc["steps"]]
    residual = [(tag, _vec_from_json(rows, field, s.parse_name)) for tag, rows in doc["residual"]]
    return Certificate(steps, doc["free"], residual, set(doc["alpha_primes"]))


# files ------------------------------------------------------------------


def dump(doc: dict, path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=1, sort_keys=True, ensure_ascii=False) + "\n")


def load(path) -> dict:
    return json.loads(Path(path).read_text())
