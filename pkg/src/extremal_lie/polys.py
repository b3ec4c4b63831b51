"""Sparse commutative polynomials over a :class:`~extremal_lie.fields.Field`.

A monomial is a sorted tuple of variable ids with repetition, so
``(3, 3, 7)`` is ``v3**2 * v7`` and ``()`` is the constant monomial.  Sparse
vectors of polynomials are plain ``dict``s ``index -> FPoly`` without zero
entries; helpers for them live at the bottom of this module.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .fields import Field

__all__ = ["FPoly", "Powers", "vec_add", "vec_scale", "vec_eval", "vec_is_zero", "vec_subs"]


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


class FPoly:
    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms=None):
        self.field = field
        self.terms = terms if terms is not None else {}

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, field: Field, c) -> "FPoly":
        c = field(c)
        return cls(field, {(): c} if c != 0 else {})

    @classmethod
    def var(cls, field: Field, v: int) -> "FPoly":
        return cls(field, {(v,): field.one})

    def copy(self) -> "FPoly":
        return FPoly(self.field, dict(self.terms))

    # predicates ---------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        return self.terms.get((), self.field.zero)

    def variables(self) -> set:
        out = set()
        for m in self.terms:
            out.update(m)
        return out

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, FPoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, FPoly):
            other = FPoly.const(self.field, other)
        out = dict(self.terms)
        norm = self.field.norm
        for m, c in other.terms.items():
            s = norm(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return FPoly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        norm = self.field.norm
        return FPoly(self.field, {m: norm(-c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, FPoly) else self.field.neg(self.field(other)))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "FPoly":
        c = self.field.norm(c)
        if c == 0:
            return FPoly(self.field)
        if c == 1:
            return self.copy()
        norm = self.field.norm
        return FPoly(self.field, {m: norm(v * c) for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, FPoly):
            return self.scale(other)
        if not self.terms or not other.terms:
            return FPoly(self.field)
        if len(other.terms) == 1 and () in other.terms:
            return self.scale(other.terms[()])
        if len(self.terms) == 1 and () in self.terms:
            return other.scale(self.terms[()])
        norm = self.field.norm
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return FPoly(self.field, {m: c for m, c in ((m, norm(c)) for m, c in out.items()) if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        out = FPoly.const(self.field, 1)
        for _ in range(e):
            out = out * self
        return out

    # substitution and evaluation ---------------------------------------
    def subs(self, v: int, powers) -> "FPoly":
        """Replace variable ``v``; ``powers[k]`` must be the k-th power of its value."""
        if not any(v in m for m in self.terms):
            return self
        norm = self.field.norm
        out = {}
        for m, c in self.terms.items():
            e = m.count(v)
            if e == 0:
                out[m] = norm(out.get(m, 0) + c)
                continue
            rest = tuple(x for x in m if x != v)
            for m2, c2 in powers[e].terms.items():
                mm = _mono_mul(rest, m2)
                out[mm] = norm(out.get(mm, 0) + c * c2)
        return FPoly(self.field, {m: c for m, c in out.items() if c})

    def evaluate(self, values, field: Field | None = None):
        """Evaluate at ``values[v]`` (mapping or sequence); result lies in ``field``."""
        field = field or self.field
        total = field.zero
        for m, c in self.terms.items():
            t = field(c) if field is not self.field else c
            for v in m:
                t = field.mul(t, values[v])
            total = field.add(total, t)
        return total

    def reduce_to(self, field: Field) -> "FPoly":
        """Map coefficients into another field (e.g. Q -> GF(p))."""
        out = {}
        for m, c in self.terms.items():
            c2 = field(Fraction(int(c.numerator), int(c.denominator))) if hasattr(c, "denominator") else field(c)
            if c2:
                out[m] = c2
        return FPoly(field, out)

    def linear_candidates(self):
        """Variables occurring only in a degree-one monomial with nonzero coefficient.

        Yields ``(v, alpha)`` pairs, alpha being the coefficient of ``v``.
        """
        bad = set()
        lin = {}
        for m, c in self.terms.items():
            if len(m) == 1:
                lin[m[0]] = c
            else:
                bad.update(m)
        return [(v, c) for v, c in lin.items() if v not in bad]

    # text ---------------------------------------------------------------
    def to_str(self, name) -> str:
        """Canonical text form; ``name(v)`` gives the variable spelling."""
        if not self.terms:
            return "0"
        field = self.field
        parts = []
        for m in sorted(self.terms, key=lambda m: (-len(m), m)):
            c = self.terms[m]
            if field.p:
                sign, mag = "+", field.to_str(c)
            else:
                sign = "-" if c < 0 else "+"
                mag = field.to_str(abs(c))
            factors = []
            i = 0
            while i < len(m):
                j = i
                while j < len(m) and m[j] == m[i]:
                    j += 1
                e = j - i
                factors.append(name(m[i]) + (f"^{e}" if e > 1 else ""))
                i = j
            if factors and mag == "1":
                body = "*".join(factors)
            else:
                body = "*".join([mag] + factors)
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"FPoly({self.to_str(lambda v: f'v{v}')})"

    @classmethod
    def parse(cls, field: Field, text: str, var_id) -> "FPoly":
        """Inverse of :meth:`to_str`; ``var_id(token)`` maps a variable token to its id."""
        text = text.strip()
        out = FPoly(field)
        if text == "0":
            return out
        sign = 1
        for tok in re.findall(r"[+-]|[^+\-\s]+", text):
            if tok in ("+", "-"):
                sign = -sign if tok == "-" else sign
                continue
            coeff = field(sign)
            mono = []
            for fac in tok.split("*"):
                if fac.startswith("f["):
                    base, _, e = fac.partition("^")
                    mono.extend([var_id(base)] * (int(e) if e else 1))
                else:
                    coeff = field.mul(coeff, field(fac))
            out = out + FPoly(field, {tuple(sorted(mono)): coeff})
            sign = 1
        return out


# sparse vectors of FPoly ------------------------------------------------


def vec_add(dst: dict, src: dict, coeff=None) -> dict:
    """In place ``dst += coeff * src``; ``coeff`` may be a scalar or FPoly."""
    for k, p in src.items():
        q = p if coeff is None else p * coeff
        if not q:
            continue
        cur = dst.get(k)
        s = q if cur is None else cur + q
        if s:
            dst[k] = s
        else:
            dst.pop(k, None)
    return dst


def vec_scale(v: dict, coeff) -> dict:
    out = {}
    for k, p in v.items():
        q = p * coeff
        if q:
            out[k] = q
    return out


def vec_is_zero(v: dict) -> bool:
    return not any(v.values())


def vec_eval(v: dict, values, field: Field) -> dict:
    out = {}
    for k, p in v.items():
        c = p.evaluate(values, field)
        if c:
            out[k] = c
    return out


def vec_subs(v: dict, var: int, powers) -> dict:
    out = {}
    for k, p in v.items():
        q = p.subs(var, powers)
        if q:
            out[k] = q
    return out


class Powers:
    """Lazy list of powers of one polynomial, for :meth:`FPoly.subs`."""

    def __init__(self, base: FPoly):
        self._p = [FPoly.const(base.field, 1), base]

    def __getitem__(self, k: int) -> FPoly:
        while len(self._p) <= k:
            self._p.append(self._p[-1] * self._p[1])
        return self._p[k]
