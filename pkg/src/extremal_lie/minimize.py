"""Shrinking the f-set: harvest relations, eliminate linear variables, certify.

Relations are vectors over B with coefficients in R_F that must vanish:

* extremality  [y,[y,c]] - r_y(c) y  for every pair (y, c);
* Jacobi       [[x,v],w] - [x,[v,w]] + [v,[x,w]]  for x in Pi and v, w in B;
* antisymmetry [u,v] + [v,u]  for u, v in B.

Together with the definition of [b, c] through the parents of b these say
exactly that the table defines a Lie algebra: the second family makes
``ad`` a homomorphism for the recursive bracket, which with antisymmetry is
the Jacobi identity on all of B^3.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field

from .fields import Field, _odd_primes
from .fset import FSetState
from .polys import FPoly, Powers, vec_add, vec_subs
from .table import MultTable

__all__ = [
    "NonFreeResidual",
    "Step",
    "Certificate",
    "extremality_relations",
    "jacobi_relations",
    "antisymmetry_relations",
    "collect_relations",
    "Minimizer",
    "minimize_fset",
    "InterleavedMinimizer",
    "replay",
    "certify_affine",
]

log = logging.getLogger(__name__)


class NonFreeResidual(Warning):
    pass


@dataclass
class Step:
    var: int
    expr: FPoly
    source: str


@dataclass
class Certificate:
    steps: list = dc_field(default_factory=list)
    free: bool = False
    residual: list = dc_field(default_factory=list)  # (tag, vector) still nonzero
    primes: set = dc_field(default_factory=set)  # odd primes of divided coefficients


def _minus_scaled_unit(vec: dict, idx: int, t: FPoly) -> dict:
    out = dict(vec)
    if t:
        cur = out.get(idx)
        s = -t if cur is None else cur - t
        if s:
            out[idx] = s
        else:
            out.pop(idx, None)
    return out


def extremality_relations(table: MultTable, state: FSetState, lengths=None):
    B = table.basis
    one = FPoly.const(table.field, 1)
    for c, w in enumerate(B.words):
        if lengths is not None and len(w) not in lengths:
            continue
        for y in range(B.n):
            v = table.act(y, table.act(y, {c: one}))
            rel = _minus_scaled_unit(v, y, state.value(y, c))
            if rel:
                yield (f"extremality({y},{c})", rel)


def jacobi_relations(table: MultTable):
    B = table.basis
    order = sorted(range(len(B)), key=lambda i: B.lengths[i])
    for x in range(B.n):
        for v in order:
            xv = table.entries[(x, v)]
            for w in order:
                left = table.bracket(xv, {w: FPoly.const(table.field, 1)}) if xv else {}
                rel = dict(left)
                vw = table.bracket_basis(v, w)
                if vw:
                    vec_add(rel, table.act(x, vw), FPoly.const(table.field, -1))
                xw = table.entries[(x, w)]
                for d, cd in xw.items():
                    vec_add(rel, table.bracket_basis(v, d), cd)
                if rel:
                    yield (f"jacobi({x},{v},{w})", rel)


def antisymmetry_relations(table: MultTable):
    B = table.basis
    for u in range(len(B)):
        for v in range(u, len(B)):
            rel = dict(table.bracket_basis(u, v))
            vec_add(rel, table.bracket_basis(v, u))
            if rel:
                yield (f"antisymmetry({u},{v})", rel)


def collect_relations(table: MultTable, state: FSetState):
    yield from extremality_relations(table, state)
    yield from jacobi_relations(table)
    yield from antisymmetry_relations(table)


class Minimizer:
    """Greedy elimination of variables occurring linearly with constant coefficient."""

    def __init__(self, state: FSetState, table: MultTable, cert: Certificate | None = None, others=()):
        self.state = state
        self.table = table
        self.field: Field = state.field
        self.cert = cert if cert is not None else Certificate()
        self.pool: list = []
        self.others = list(others)  # extra callables receiving (var, powers)

    def add(self, rels) -> None:
        for tag, vec in rels:
            if vec:
                self.pool.append((tag, vec))

    def _candidate(self):
        best = None
        for tag, vec in self.pool:
            for p in vec.values():
                for v, alpha in p.linear_candidates():
                    if best is None or v > best[0]:
                        best = (v, alpha, p, tag)
        return best

    def eliminate(self, v: int, alpha, p: FPoly, tag: str) -> None:
        field = self.field
        if not self.field.p:
            self.field.note_denominator(alpha.denominator)
            self.cert.primes |= _odd_primes(alpha.numerator) | _odd_primes(alpha.denominator)
        rest = p - FPoly.var(field, v).scale(alpha)
        expr = rest.scale(field.neg(field.inv(alpha)))
        powers = Powers(expr)
        self.cert.steps.append(Step(v, expr, tag))
        self.state.substitute(v, powers)
        self.state.source[v] = f"eliminated:{tag}"
        self.table.substitute(v, powers)
        for f in self.others:
            f(v, powers)
        pool = []
        for t, vec in self.pool:
            vec = vec_subs(vec, v, powers)
            if vec:
                pool.append((t, vec))
        self.pool = pool
        log.debug("eliminated %s via %s", self.state.name(v), tag)

    def run(self) -> Certificate:
        while True:
            cand = self._candidate()
            if cand is None:
                break
            self.eliminate(*cand)
        self.cert.residual = list(self.pool)
        self.cert.free = not self.pool
        return self.cert


def minimize_fset(state: FSetState, table: MultTable, relations=None, cert: Certificate | None = None,
                  others=(), pool=()):
    """Eliminate until no relation offers a linear variable; returns the certificate.

    ``state`` and ``table`` are updated in place.  Without explicit relations
    the full family (extremality, Jacobi, antisymmetry) is streamed, with an
    elimination pass after each family.
    """
    mz = Minimizer(state, table, cert, others)
    mz.add(pool)
    if relations is not None:
        mz.add(relations)
        return mz.run()
    for family in (lambda: extremality_relations(table, state), lambda: jacobi_relations(table),
                   lambda: antisymmetry_relations(table)):
        mz.add(family())
        mz.run()
    return mz.cert


class InterleavedMinimizer:
    """Table-builder hook: after each level, eliminate with the relations found so far.

    New rows from the builder and the extremality relations of the pairs just
    admitted are fed to one persistent :class:`Minimizer`; :meth:`finish`
    streams the complete families once the table is done.
    """

    def __init__(self, cert: Certificate | None = None):
        self.cert = cert if cert is not None else Certificate()
        self.mz: Minimizer | None = None
        self.seen = 0

    def __call__(self, builder, L: int) -> None:
        if self.mz is None:
            self.mz = Minimizer(builder.state, builder.table, self.cert)
        self.mz.add(builder.relations[self.seen:])
        self.seen = len(builder.relations)
        if L >= 3:
            self.mz.add(extremality_relations(builder.table, builder.state, lengths={L - 2}))
        before = len(self.cert.steps)
        self.mz.run()
        if len(self.cert.steps) != before:
            builder.clear_caches()

    def finish(self, builder) -> Certificate:
        if self.mz is None:
            self.mz = Minimizer(builder.state, builder.table, self.cert)
        self.mz.add(builder.relations[self.seen:])
        self.seen = len(builder.relations)
        return minimize_fset(builder.state, builder.table, cert=self.cert, pool=self.mz.pool)


def replay(cert: Certificate, table: MultTable, state: FSetState | None = None) -> MultTable:
    """Apply the certificate's substitutions in order to a copy of ``table``."""
    out = table.copy()
    for st in cert.steps:
        powers = Powers(st.expr)
        out.substitute(st.var, powers)
        if state is not None:
            state.substitute(st.var, powers)
    return out


def certify_affine(cert: Certificate, state: FSetState) -> dict:
    d = len(state.F)
    if cert.free:
        text = "X = {0}" if d == 0 else f"X ≅ K^{d}"
        return {"free": True, "dimX": d, "statement": text,
                "sandwiches": d == 0}
    gens = []
    for tag, vec in cert.residual:
        for c, p in sorted(vec.items()):
            gens.append(p.to_str(state.name))
    return {"free": False, "dimX": None, "upper_bound": d, "residual_count": len(cert.residual),
            "residual_generators": gens,
            "statement": f"X is the closed subvariety of K^{d} cut out by the residual generators"}
