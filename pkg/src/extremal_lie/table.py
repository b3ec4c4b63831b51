"""Generic multiplication table over R_F, built level by level.

At level L the unknowns are the products [x, b] with |b| = L - 1 that are not
themselves basis elements.  Every relation is weight homogeneous (f_y(c) has
weight |c| + 1), so the unknowns occur with constant coefficients and each
level is an ordinary linear system over K whose right-hand sides are vectors
over R_F.  Rows whose left side vanishes are relations on the f-set; they are
handed to the minimizer.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field

from .basis import MonomialBasis
from .fields import Field
from .fset import FSetState, LemmaEngine
from .linalg import SparseEchelon
from .monomials import jacobi_monomials, shorten_repeat
from .polys import FPoly, vec_add, vec_subs

__all__ = ["KCapExceeded", "NonConstantPivot", "MultTable", "TableBuilder", "compute_mult_table"]

log = logging.getLogger(__name__)


class KCapExceeded(RuntimeError):
    pass


class NonConstantPivot(RuntimeError):
    """An unknown occurred with a non-constant coefficient (would need localisation)."""


class _Missing(Exception):
    pass


@dataclass
class MultTable:
    """Products [x, b] for generators x and basis indices b, as vectors over R_F."""

    basis: MonomialBasis
    field: Field
    entries: dict = dc_field(default_factory=dict)  # (x, b) -> {c: FPoly}

    def __getitem__(self, key):
        return self.entries[key]

    def copy(self) -> "MultTable":
        return MultTable(self.basis, self.field, {k: dict(v) for k, v in self.entries.items()})

    def __post_init__(self):
        self._br: dict = {}

    def substitute(self, v: int, powers) -> None:
        for k, vec in self.entries.items():
            self.entries[k] = vec_subs(vec, v, powers)
        self._br.clear()

    def clear_cache(self) -> None:
        self._br.clear()

    def bracket_basis(self, b: int, c: int) -> dict:
        """[b, c] for basis indices: [[y,b'],c] = [y,[b',c]] - [b',[y,c]]."""
        key = (b, c)
        hit = self._br.get(key)
        if hit is not None:
            return hit
        par = self.basis.parent[b]
        if par is None:
            res = self.entries[(b, c)]
        else:
            y, bp = par
            res = self.act(y, self.bracket_basis(bp, c))
            for d, cd in self.entries[(y, c)].items():
                vec_add(res, self.bracket_basis(bp, d), -cd)
        self._br[key] = res
        return res

    def bracket(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for b, cb in u.items():
            for c, cc in v.items():
                vec_add(out, self.bracket_basis(b, c), cb * cc)
        return out

    def act(self, x: int, vec: dict) -> dict:
        out: dict = {}
        for b, c in vec.items():
            vec_add(out, self.entries[(x, b)], c)
        return out

    def variables(self) -> set:
        out = set()
        for vec in self.entries.values():
            for p in vec.values():
                out |= p.variables()
        return out


@dataclass
class LevelStats:
    level: int
    unknowns: int
    rows: int
    k: int
    relations: int
    supplementary: bool = False


class TableBuilder:
    """Runs the table computation with the lazy initial f-set."""

    def __init__(self, basis: MonomialBasis, field: Field, k_cap: int = 4, minimizer=None):
        self.B = basis
        self.field = field
        self.g = basis.graph
        self.n = basis.n
        self.NB = len(basis)
        self.k_cap = k_cap
        self.table = MultTable(basis, field)
        self.state = FSetState(basis, field)
        self.engine = LemmaEngine(self.state, self.express)
        self.minimizer = minimizer  # called as minimizer(builder, relations) after each level
        self.done = 1  # products of total length <= done are in the table
        self.relations: list = []  # (tag, vector over B) that must vanish
        self.stats: list = []
        self._expr: dict = {}
        self.one = FPoly.const(field, 1)

    # evaluation ---------------------------------------------------------
    def clear_caches(self) -> None:
        self._expr.clear()
        self.engine.clear()
        self.table.clear_cache()

    def express(self, word: tuple):
        """Basis vector of a monomial whose length is at most the finished level."""
        if len(word) > self.done:
            return None
        hit = self._expr.get(word)
        if hit is not None:
            return hit
        if len(word) == 1:
            vec = {word[0]: self.one}
        else:
            vec = self.table.act(word[0], self.express(word[1:]))
        self._expr[word] = vec
        return vec

    def _act_sym(self, x: int, vec: dict, level: int) -> dict:
        """Act with x; unknown top products become symbols NB + x*NB + b."""
        out: dict = {}
        ent = self.table.entries
        for b, c in vec.items():
            e = ent.get((x, b))
            if e is not None:
                vec_add(out, e, c)
            elif self.B.lengths[b] == level - 1:
                vec_add(out, {self.NB + x * self.NB + b: c})
            else:
                raise _Missing((x, b))
        return out

    def eval_sym(self, word: tuple, level: int) -> dict:
        vec = self.express(word[1:]) if len(word) - 1 <= self.done else None
        if vec is None:
            vec = {word[-1]: self.one}
            for x in reversed(word[1:-1]):
                vec = self._act_sym(x, vec, level)
        return self._act_sym(word[0], vec, level)

    def monomial_to_basis(self, word: tuple):
        """Basis vector of a length-L monomial via the fixed patterns, else ``None``."""
        l = len(word)
        if l <= self.done:
            return self.express(word)
        try:
            vec = self.eval_sym(word, l)
        except _Missing:
            vec = None
        if vec is not None and all(k < self.NB for k in vec):
            return vec
        if word[-2] == word[-1] or not self.g.adjacent(word[-2], word[-1]):
            return {}
        s, ex = self.state, self.express
        if l == 2:
            e = self.table.entries.get((word[1], word[0]))
            if e is not None:
                return {k: -p for k, p in e.items()}
            return None
        for i in range(l - 1):
            if word[i] == word[i + 1]:
                x = word[i]
                return _scaled(ex(word[: i + 1]), s.fval(x, ex(word[i + 2:])))
        for i in range(l - 2):
            if word[i] == word[i + 2]:
                x, y, z = word[i], word[i + 1], word[i + 3:]
                pre = word[: i + 1]
                if not z:
                    # [x,[y,x]] = -f_x(y) x
                    return _scaled(ex(pre), -s.fval(x, {y: self.one}))
                half = self.field._half
                out: dict = {}
                t_xyz = s.fval(x, ex((y,) + z))
                t_xy = s.fval(x, {y: self.one})
                t_xz = s.fval(x, ex(z))
                if t_xyz:
                    vec_add(out, ex(pre), t_xyz.scale(half))
                if t_xz:
                    vec_add(out, ex(pre + (y,)), t_xz.scale(self.field.neg(half)))
                if t_xy:
                    vec_add(out, ex(pre + z), t_xy.scale(self.field.neg(half)))
                return out
        return None

    def eval_term(self, word: tuple, level: int) -> dict:
        v = self.monomial_to_basis(word)
        return v if v is not None else self.eval_sym(word, level)

    # f-values for the shortening rewrite -------------------------------
    def _fval_word(self, x, word):
        return self.state.fval(x, self.express(word))

    def _fbracket(self, x, u, v):
        return self.state.fval(x, self.bracket(self.express(u), self.express(v)))

    def bracket(self, u: dict, v: dict) -> dict:
        """[u, v] for basis vectors whose total length is within the finished levels."""
        out: dict = {}
        for b, cb in u.items():
            for c, cc in v.items():
                vec_add(out, self.bracket_basis(b, c), cb * cc)
        return out

    def bracket_basis(self, b: int, c: int) -> dict:
        return self.table.bracket_basis(b, c)

    # relations ----------------------------------------------------------
    def _row(self, combo: dict, level: int, sym_of_m: int | None):
        """Turn ``sym_of_m = sum c_w w`` (or ``0 = sum c_w w``) into (lhs, rhs)."""
        total: dict = {}
        if sym_of_m is not None:
            total[sym_of_m] = FPoly.const(self.field, -1)
        for w, c in combo.items():
            vec_add(total, self.eval_term(w, level), c)
        lhs, rhs = {}, {}
        for k, p in total.items():
            if k >= self.NB:
                if not p.is_constant():
                    raise NonConstantPivot(f"unknown {k} has coefficient {p}")
                lhs[k] = p.constant_value()
            else:
                rhs[k] = -p
        return lhs, rhs

    def monomial_relations(self, word: tuple, k: int, level: int) -> list:
        """Relations for ``word`` from the unfolding at position k and the
        shortening rewrite for repeats starting at position k."""
        out = []
        l = len(word)
        if k <= l - 2:
            combo = {w: FPoly.const(self.field, c) for w, c in jacobi_monomials(word, k).items()}
            out.append(("jacobi", combo))
        i = k
        for j in range(i + 3, l + 1):
            if word[i - 1] == word[j - 1]:
                combo = shorten_repeat(word, i, j, self._fval_word, self._fbracket, self.field)
                if combo is not None:
                    out.append(("shorten", combo))
        return out

    def pattern_rows(self, L: int) -> list:
        """Extremality and Premet identities for words outside the unknown set.

        For ``[x,[x,c]]`` and ``[x,[y,[x,c]]]`` with c a basis element, the
        inside-out value (in unknowns) must equal the pattern value.  Used only
        when the unfolding and shortening relations stall.
        """
        B, g = self.B, self.g
        out = []
        words = [(x, x) + B.words[c] for c in B.by_length(L - 2) for x in range(self.n)]
        words += [(x, y, x) + B.words[c] for c in B.by_length(L - 3)
                  for x in range(self.n) for y in g.neighbours(x)]
        for w in words:
            v = self.monomial_to_basis(w)
            if v is None:
                continue
            total = self.eval_sym(w, L)
            vec_add(total, v, FPoly.const(self.field, -1))
            lhs, rhs = {}, {}
            for k, p in total.items():
                if k >= self.NB:
                    if not p.is_constant():
                        raise NonConstantPivot(f"unknown {k} has coefficient {p}")
                    lhs[k] = p.constant_value()
                else:
                    rhs[k] = -p
            if lhs or rhs:
                out.append((lhs, rhs))
        return out

    def compute_level(self, L: int) -> None:
        B, NB = self.B, self.NB
        field = self.field
        if L - 2 >= 1:
            self._fset_upto(L - 2)
        tops = B.by_length(L - 1)
        unknown = []
        for b in tops:
            for x in range(self.n):
                c = B.child(x, b)
                if c is not None:
                    self.table.entries[(x, b)] = {c: FPoly.const(field, 1)}
                else:
                    unknown.append((x, b))
        ech = SparseEchelon(field)
        rows = 0
        nrel = 0

        def add(lhs, rhs, tag):
            nonlocal rows, nrel
            rows += 1
            r, a = ech.reduce(lhs, rhs)
            if r:
                ech.insert(r, a)
            elif a and any(a.values()):
                self.relations.append((f"{tag}@{L}", {k: p for k, p in a.items() if p}))
                nrel += 1

        pending = []
        for x, b in unknown:
            word = (x,) + B.words[b]
            sym = NB + x * NB + b
            v = self.monomial_to_basis(word)
            if v is not None:
                add({sym: field.one}, v, "mtb")
            else:
                pending.append((word, sym))
        k = 1
        supplementary = False
        while ech.rank < len(unknown):
            if k > self.k_cap:
                if supplementary:
                    raise KCapExceeded(f"level {L}: rank {ech.rank} < {len(unknown)} after k = {self.k_cap}")
                supplementary = True
                for lhs, rhs in self.pattern_rows(L):
                    add(lhs, rhs, "pattern")
                continue
            for word, sym in pending:
                for tag, combo in self.monomial_relations(word, k, L):
                    lhs, rhs = self._row(combo, L, sym)
                    add(lhs, rhs, tag)
            k += 1
        ech.back_substitute()
        for x, b in unknown:
            sym = NB + x * NB + b
            row = ech.rows[sym]
            if len(row) != 1:
                raise RuntimeError("echelon form is not fully reduced")
            self.table.entries[(x, b)] = {c: p for c, p in ech.aux[sym].items() if p}
        self.done = L
        self.clear_caches()
        self.stats.append(LevelStats(L, len(unknown), rows, k - 1, nrel, supplementary))
        log.info("level %d: %d unknowns, %d rows, k=%d, %d relations", L, len(unknown), rows, k - 1, nrel)

    def _fset_upto(self, length: int) -> None:
        B = self.B
        for c, w in enumerate(B.words):
            if len(w) > length:
                break
            for y in range(self.n):
                self.engine.compute(y, c)

    def run(self) -> MultTable:
        maxlen = self.B.maxlen
        for L in range(2, maxlen + 2):
            self.compute_level(L)
            if self.minimizer is not None:
                self.minimizer(self, L)
        self._fset_upto(maxlen)
        return self.table


def _scaled(vec: dict, t: FPoly) -> dict:
    out = {}
    if t:
        for k, p in vec.items():
            q = p * t
            if q:
                out[k] = q
    return out


def compute_mult_table(basis: MonomialBasis, field: Field, k_cap: int = 4, minimizer=None):
    tb = TableBuilder(basis, field, k_cap, minimizer)
    tb.run()
    return tb
