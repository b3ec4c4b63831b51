"""Left-normed Lie monomials, bracket expressions and the rewriting identities.

A monomial is a tuple ``(x1, ..., xl)`` meaning ``[x1,[x2,[...,[x_{l-1},x_l]]]]``.
A bracket expression is either a generator id or a pair ``(a, b)`` of bracket
expressions meaning ``[a, b]``.  Linear combinations are dicts with integer or
field coefficients and no zero entries.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .polys import FPoly

__all__ = [
    "LengthTooShort",
    "IndexOutOfRange",
    "comb",
    "flatten",
    "leaves",
    "ad_expansion",
    "expand",
    "jacobi_unfold",
    "jacobi_monomials",
    "regroup_prefix",
    "shorten_repeat",
]


class LengthTooShort(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


def comb(m: tuple):
    """Right-combed bracket expression of a monomial."""
    e = m[-1]
    for x in reversed(m[:-1]):
        e = (x, e)
    return e


def flatten(e):
    """Monomial of a right-combed expression, else ``None``."""
    out = []
    while isinstance(e, tuple):
        a, e = e
        if isinstance(a, tuple):
            return None
        out.append(a)
    out.append(e)
    return tuple(out)


def leaves(e) -> list:
    if isinstance(e, tuple):
        return leaves(e[0]) + leaves(e[1])
    return [e]


def _acc(d: dict, k, c) -> None:
    s = d.get(k, 0) + c
    if s:
        d[k] = s
    else:
        d.pop(k, None)


@lru_cache(maxsize=None)
def _ad_exp(m: tuple) -> tuple:
    if len(m) == 1:
        return ((m, 1),)
    a, rest = m[0], m[1:]
    out: dict = {}
    for w, c in _ad_exp(rest):
        _acc(out, (a,) + w, c)
        _acc(out, w + (a,), -c)
    return tuple(out.items())


def ad_expansion(m: tuple) -> dict:
    """``ad_m`` as a signed sum of words ``w`` meaning ``ad_{w1} ... ad_{wr}``."""
    return dict(_ad_exp(tuple(m)))


def expand(e) -> dict:
    """Rewrite a bracket expression as a combination of left-normed monomials."""
    if not isinstance(e, tuple):
        return {(e,): 1}
    a, b = e
    right = expand(b)
    out: dict = {}
    for ma, ca in expand(a).items():
        for w, cw in ad_expansion(ma).items():
            for mb, cb in right.items():
                _acc(out, w + mb, ca * cw * cb)
    return out


def jacobi_unfold(m: tuple) -> dict:
    """``[x1,[x2,T]] = [x2,[x1,T]] - [T,[x1,x2]]`` with ``ad_T`` fully unfolded.

    Returns right-combed bracket expressions: the swapped monomial plus the
    2^(l-3) monomials ``[w1,[...,[w_{l-2},[x1,x2]]]]`` of the tail unfolding.
    """
    l = len(m)
    if l < 3:
        raise LengthTooShort(f"Jacobi unfolding needs length >= 3, got {l}")
    x1, x2, t = m[0], m[1], m[2:]
    out: dict = {}
    _acc(out, comb((x2, x1) + t), 1)
    for w, c in ad_expansion(t).items():
        _acc(out, comb(w + (x1, x2)), -c)
    return out


def jacobi_monomials(m: tuple, k: int) -> dict:
    """Unfold the tail starting at 1-based position ``k`` under the fixed prefix."""
    prefix = m[: k - 1]
    return {prefix + flatten(e): c for e, c in jacobi_unfold(m[k - 1:]).items()}


def regroup_prefix(m: tuple, i: int):
    """Bring the generators strictly between positions 1 and ``i`` into one bracket.

    Returns ``((c, nested), others)`` with ``m = c * nested + sum others`` where
    ``nested`` is ``[x1, [[x_{i-1},...,x2], [x_i,...,x_l]]]`` and ``others`` maps
    length-l monomials to coefficients.  Positions are 1-based and ``i >= 3``.
    Returns ``None`` when repeated letters cancel the coefficient of ``m`` in
    the expansion, so that no such rewriting exists.
    """
    l = len(m)
    if not (3 <= i <= l):
        raise IndexOutOfRange(f"regroup index {i} outside 3..{l}")
    ys = m[1 : i - 1]
    rev = tuple(reversed(ys))
    exp = ad_expansion(rev)
    ct = exp.get(ys, 0)  # (-1)^(r-1) unless repeated letters interfere
    if ct == 0:
        return None
    nested = (m[0], (comb(rev), comb(m[i - 1:])))
    others: dict = {}
    for w, c in exp.items():
        if w != ys:
            _acc(others, (m[0],) + w + m[i - 1:], Fraction(-c, ct))
    return (Fraction(1, ct), nested), others


def shorten_repeat(m: tuple, i: int, j: int, fval, fbracket, field):
    """Rewrite ``m`` with ``x_i = x_j`` (1-based, ``j - i >= 3``) via Premet.

    ``fval(x, word)`` must return f_x of a shorter monomial, and
    ``fbracket(x, u, v)`` the value f_x([u, v]) for monomials u, v.
    Returns a combination of monomials with coefficients in the parameter ring
    over ``field``, or ``None`` when the regrouping degenerates.
    """
    l = len(m)
    if not (1 <= i and j <= l and j - i >= 3):
        raise IndexOutOfRange(f"bad repeat positions {(i, j)} for length {l}")
    x = m[i - 1]
    if m[j - 1] != x:
        raise ValueError("positions do not carry the same generator")
    prefix = m[: i - 1]
    inner = m[i - 1:]  # [x, y1, ..., yr, x, z...]
    rg = regroup_prefix(inner, j - i + 1)
    if rg is None:
        return None
    (ct, _nested), others = rg
    ct = field(ct)
    half = field.halve(ct)
    rev = tuple(reversed(m[i : j - 1]))
    z = m[j:]
    out: dict = {}

    def add(word, coeff):
        cur = out.get(word)
        s = coeff if cur is None else cur + coeff
        if s:
            out[word] = s
        else:
            out.pop(word, None)

    # inner = ct * [x, [Y, [x, Z]]] + others
    if not z:
        # [x,[Y,x]] = -[x,[x,Y]] = -f_x(Y) x
        add(prefix + (x,), fval(x, rev).scale(field.neg(ct)))
    else:
        add(prefix + (x,), fbracket(x, rev, z).scale(half))
        add(prefix + (x,) + rev, fval(x, z).scale(field.neg(half)))
        add(prefix + (x,) + z, fval(x, rev).scale(field.neg(half)))
    for w, c in others.items():
        add(prefix + w, FPoly.const(field, field(c)))
    return out
