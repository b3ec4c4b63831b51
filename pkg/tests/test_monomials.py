"""Rewriting identities checked in a concrete Lie algebra of integer matrices.

Generators are rank-one nilpotent matrices, which are extremal with
f_X(M) = -2 tr(XM); any identity valid in every Lie algebra generated by
extremal elements must hold for them.
"""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from extremal_lie.fields import QQ
from extremal_lie.monomials import (IndexOutOfRange, LengthTooShort, comb, expand, flatten, jacobi_monomials,
                                    jacobi_unfold, regroup_prefix, shorten_repeat)
from extremal_lie.polys import FPoly
from oracles import mat_br, rank1_extremals

Q = QQ()
X = rank1_extremals(5, 4, np.random.default_rng(7))


def ev(m):
    e = X[m[-1]]
    for x in reversed(m[:-1]):
        e = mat_br(X[x], e)
    return e


def evx(e):
    return X[e] if not isinstance(e, tuple) else mat_br(evx(e[0]), evx(e[1]))


def f(x, M):
    return -2 * np.trace(X[x] @ M)


def combo(d, evf):
    return sum((c * evf(k) for k, c in d.items()), np.zeros((5, 5), dtype=object))


def test_generators_are_extremal():
    for x in range(4):
        for m in [(1,), (2, 0), (1, 2, 3)]:
            y = ev(m)
            assert (mat_br(X[x], mat_br(X[x], y)) == f(x, y) * X[x]).all()


mono = st.lists(st.integers(0, 3), min_size=3, max_size=7).map(tuple)


@settings(max_examples=150)
@given(mono)
def test_jacobi_unfold(m):
    out = jacobi_unfold(m)
    assert (combo(out, evx) == ev(m)).all()
    assert len(out) <= 1 + 2 ** (len(m) - 3)


@settings(max_examples=100)
@given(mono, st.data())
def test_jacobi_monomials_at_position(m, data):
    k = data.draw(st.integers(1, len(m) - 2))
    out = jacobi_monomials(m, k)
    assert all(len(w) == len(m) and w[: k - 1] == m[: k - 1] for w in out)
    assert (combo(out, ev) == ev(m)).all()


@settings(max_examples=100)
@given(mono)
def test_expand_right_combed(m):
    assert flatten(comb(m)) == m
    assert (combo(expand(comb(m)), ev) == ev(m)).all()


@settings(max_examples=100)
@given(mono, st.data())
def test_regroup_prefix(m, data):
    i = data.draw(st.integers(3, len(m)))
    rg = regroup_prefix(m, i)
    if rg is None:
        return
    (c, nested), others = rg
    assert (c * evx(nested) + combo(others, ev) == ev(m)).all()


@settings(max_examples=200)
@given(st.lists(st.integers(0, 3), min_size=4, max_size=7).map(tuple), st.data())
def test_shorten_repeat(m, data):
    l = len(m)
    i = data.draw(st.integers(1, l - 3))
    j = data.draw(st.integers(i + 3, l))
    m = m[: j - 1] + (m[i - 1],) + m[j:]

    def fval(x, w):
        return FPoly.const(Q, int(f(x, ev(w))))

    def fbr(x, u, v):
        return FPoly.const(Q, int(f(x, mat_br(ev(u), ev(v)))))

    out = shorten_repeat(m, i, j, fval, fbr, Q)
    if out is None:
        return
    assert max(len(w) for w in out) <= l
    tot = sum((np.array(ev(w)) * c.constant_value() for w, c in out.items()), np.zeros((5, 5), dtype=object))
    assert (tot == ev(m)).all()


def test_errors():
    with pytest.raises(LengthTooShort):
        jacobi_unfold((0, 1))
    with pytest.raises(IndexOutOfRange):
        regroup_prefix((0, 1, 2), 4)
    with pytest.raises(IndexOutOfRange):
        shorten_repeat((0, 1, 0), 1, 3, None, None, Q)
