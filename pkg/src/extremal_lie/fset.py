"""f-sets: the parameter ring R_F, the expression map r, and the initial f-set.

A pair ``(y, c)`` in Pi x B is encoded as the integer ``c * n + y``; integer
order on these ids is exactly the pair order ((x,b) < (y,c) iff b < c, or
b = c and x < y).  The variable f[y][c] of R_F uses the same id.
"""
from __future__ import annotations

import re

from .basis import MonomialBasis
from .fields import Field
from .polys import FPoly

__all__ = ["FSetState", "LemmaEngine", "pair_order", "initial_fset"]


def pair_order(a: tuple, b: tuple) -> int:
    """Three-way comparison of pairs ``(x, b_index)``."""
    ka, kb = (a[1], a[0]), (b[1], b[0])
    return (ka > kb) - (ka < kb)


class FSetState:
    def __init__(self, basis: MonomialBasis, field: Field):
        self.basis = basis
        self.field = field
        self.n = basis.n
        self.F: list = []  # surviving variable ids, ascending
        self.r: dict = {}  # pair id -> FPoly
        self.source: dict = {}  # pair id -> rule tag

    # ids ----------------------------------------------------------------
    def vid(self, y: int, c: int) -> int:
        return c * self.n + y

    def pair(self, v: int) -> tuple:
        return v % self.n, v // self.n

    def name(self, v: int) -> str:
        y, c = self.pair(v)
        return f"f[{y}][{c}]"

    _NAME = re.compile(r"f\[(\d+)\]\[(\d+)\]")

    def parse_name(self, tok: str) -> int:
        m = self._NAME.fullmatch(tok)
        if not m:
            raise ValueError(f"bad variable {tok!r}")
        return self.vid(int(m.group(1)), int(m.group(2)))

    # values -------------------------------------------------------------
    def known(self, y: int, c: int) -> bool:
        return self.vid(y, c) in self.r

    def value(self, y: int, c: int) -> FPoly:
        return self.r[self.vid(y, c)]

    def fval(self, x: int, vec: dict) -> FPoly:
        """f_x of a basis vector, by linearity."""
        out = FPoly(self.field)
        for b, coeff in vec.items():
            t = self.r[self.vid(x, b)]
            if t:
                out = out + t * coeff
        return out

    def admit(self, y: int, c: int) -> None:
        v = self.vid(y, c)
        self.F.append(v)
        self.F.sort()
        self.r[v] = FPoly.var(self.field, v)
        self.source[v] = "variable"

    def assign(self, y: int, c: int, poly: FPoly, tag: str) -> None:
        v = self.vid(y, c)
        self.r[v] = poly
        self.source[v] = tag

    def substitute(self, v: int, powers) -> None:
        """Eliminate variable ``v`` everywhere in r (powers[k] = expr**k)."""
        if v in self.F:
            self.F.remove(v)
        for k, p in self.r.items():
            self.r[k] = p.subs(v, powers)

    def copy(self) -> "FSetState":
        s = FSetState(self.basis, self.field)
        s.F = list(self.F)
        s.r = {k: p.copy() for k, p in self.r.items()}
        s.source = dict(self.source)
        return s


class LemmaEngine:
    """Express f_y(c) through strictly smaller pairs using the rules of the lemma.

    ``express(word)`` must return the basis vector of a monomial (or ``None``
    if the needed products are not yet known).  Successful values are cached;
    call :meth:`clear` after any substitution.
    """

    def __init__(self, state: FSetState, express, depth: int = 3):
        self.s = state
        self.express = express
        self.depth = depth
        self.g = state.basis.graph
        self._cache: dict = {}

    def clear(self) -> None:
        self._cache.clear()

    def _zero(self) -> FPoly:
        return FPoly(self.s.field)

    def value(self, x: int, word: tuple, target: int, depth: int):
        """f_x(word) in terms of pairs below ``target`` and a rule tag, or ``None``."""
        key = (x, word)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        res = self._value(x, word, target, depth)
        if res is not None:
            self._cache[key] = res
        return res

    def _lookup(self, x, c, target):
        v = self.s.vid(x, c)
        if v < target and v in self.s.r:
            return self.s.r[v]
        return None

    def _value(self, x, word, target, depth):
        s, g, B = self.s, self.g, self.s.basis
        l = len(word)
        y = word[0]
        if x == y or not g.adjacent(x, y):
            return (self._zero(), "rule1" if l == 1 else "rule3")
        if l == 1:
            p = self._lookup(x, y, target)
            if p is not None:
                return (p, "lookup")
            p = self._lookup(y, x, target)
            return None if p is None else (p, "rule2")
        if l == 3 and word[2] == x:
            a = self.value(x, (word[0],), target, depth)
            b = self.value(x, (word[1],), target, depth)
            if a is not None and b is not None:
                return (a[0] * b[0], "rule5")
        if l >= 3 and word[1] == x:
            a = self.value(x, (word[0],), target, depth)
            if a is not None and not a[0]:
                return (self._zero(), "rule6")
            b = self.value(x, word[2:], target, depth)
            if a is not None and b is not None:
                return (-(a[0] * b[0]), "rule6")
        c = B.index.get(word)
        if c is not None:
            p = self._lookup(x, c, target)
            if p is not None:
                return (p, "lookup")
        vec = self.express(word)
        if vec is not None and all(self._lookup(x, b, target) is not None for b in vec):
            return (s.fval(x, vec), "linear")
        if depth <= 0:
            return None
        a = self.value(y, (x,) + word[1:], target, depth - 1)
        if a is not None:
            return (-a[0], "rule4")
        if l >= 3:
            z, m = word[1], word[2:]
            a = self.value(z, (y, x) + m, target, depth - 1)
            if a is not None:
                b = self.value(z, (x, y) + m, target, depth - 1)
                if b is not None:
                    return (a[0] - b[0], "rule7")
        rev = self.value(word[-1], tuple(reversed(word[:-1])) + (x,), target, depth - 1)
        if rev is not None:
            return (rev[0] if l % 2 == 1 else -rev[0], "rule8")
        return None

    def compute(self, y: int, c: int) -> None:
        """Run one step of the initial f-set construction for the pair (y, c)."""
        s = self.s
        target = s.vid(y, c)
        if target in s.r:
            return
        res = self._value(y, s.basis.words[c], target, self.depth)
        if res is None:
            s.admit(y, c)
        else:
            s.assign(y, c, res[0], res[1])


def initial_fset(basis: MonomialBasis, field: Field, express, upto: int | None = None,
                 state: FSetState | None = None, engine: LemmaEngine | None = None):
    """Traverse Pi x B in pair order, expressing or admitting each f_y(c).

    Only pairs with ``|c| <= upto`` are handled; the table builder calls this
    level by level so that ``express`` can use the products found so far.
    """
    state = state or FSetState(basis, field)
    engine = engine or LemmaEngine(state, express)
    for c, w in enumerate(basis.words):
        if upto is not None and len(w) > upto:
            break
        for y in range(basis.n):
            engine.compute(y, c)
    return state, engine
