"""Sparse incremental row echelon forms over a field.

Vectors are dicts ``key -> scalar`` with comparable keys; the pivot of a row is
its largest key and rows are stored monic.  Each row may carry an auxiliary
dict (coordinates, right-hand sides) that undergoes the same row operations;
auxiliary values may be scalars or :class:`~extremal_lie.polys.FPoly`.
"""
from __future__ import annotations

import heapq

import numpy as np

from .fields import Field
from .polys import FPoly

__all__ = ["SparseEchelon", "axpy", "dense", "rref", "nullspace", "rank"]


def axpy(field: Field, dst: dict, src: dict, c) -> None:
    """In place ``dst += c * src`` for scalar ``c``."""
    if c == 0:
        return
    norm = field.norm
    for k, v in src.items():
        if isinstance(v, FPoly):
            t = v.scale(c)
            cur = dst.get(k)
            s = t if cur is None else cur + t
        else:
            s = norm(dst.get(k, 0) + v * c)
        if s:
            dst[k] = s
        else:
            dst.pop(k, None)


class SparseEchelon:
    """Rows keyed by pivot; reduction eliminates pivots largest first."""

    def __init__(self, field: Field):
        self.field = field
        self.rows: dict = {}
        self.aux: dict = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict, aux: dict | None = None):
        """Return ``(residual, aux')`` with no pivot key left in ``residual``."""
        vec = dict(vec)
        aux = dict(aux) if aux is not None else None
        rows = self.rows
        heap = [_Neg(k) for k in vec if k in rows]
        heapq.heapify(heap)
        seen = set()
        while heap:
            k = heapq.heappop(heap).k
            if k in seen:
                continue
            seen.add(k)
            c = vec.get(k)
            if not c:
                continue
            row = rows[k]
            neg = self.field.neg(c)
            axpy(self.field, vec, row, neg)
            if aux is not None:
                axpy(self.field, aux, self.aux[k], neg)
            for k2 in row:
                if k2 != k and k2 in rows and k2 not in seen:
                    heapq.heappush(heap, _Neg(k2))
        return vec, aux

    def insert(self, vec: dict, aux: dict | None = None):
        """Insert an already reduced nonzero vector; returns its pivot."""
        p = max(vec)
        inv = self.field.inv(vec[p])
        row = {k: self.field.mul(v, inv) for k, v in vec.items()}
        self.rows[p] = row
        a = {}
        if aux:
            axpy(self.field, a, aux, inv)
        self.aux[p] = a
        return p

    def add(self, vec: dict, aux: dict | None = None):
        """Reduce then insert; returns the pivot or ``None`` if dependent.

        On dependence the reduced auxiliary part is available as
        ``self.last_aux``.
        """
        r, a = self.reduce(vec, aux)
        self.last_aux = a
        if not r:
            return None
        return self.insert(r, a)

    def back_substitute(self) -> None:
        """Bring the rows to reduced echelon form (pivots absent from other rows)."""
        for p in sorted(self.rows):
            row = self.rows[p]
            others = [k for k in row if k != p and k in self.rows]
            if not others:
                continue
            vec = {p: self.field.one}
            tail = {k: v for k, v in row.items() if k != p}
            tail, a = self.reduce(tail, self.aux[p])
            vec.update(tail)
            self.rows[p] = vec
            self.aux[p] = a


class _Neg:
    """Heap wrapper giving max-heap order on arbitrary comparable keys."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return other.k < self.k


# dense matrices for specialised algebras -------------------------------


def dense(field: Field, shape):
    """Zero matrix: int64 residues for GF(p) (p < 2^31), object mpq otherwise."""
    if field.p and field.p < 2**31:
        return np.zeros(shape, dtype=np.int64)
    out = np.empty(shape, dtype=object)
    out.fill(field.zero)
    return out


def rref(A, field: Field):
    """Reduced row echelon form of a dense matrix; returns ``(R, pivot_columns)``."""
    R = A.copy()
    p = field.p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c] != 0)[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        inv = field.inv(R[r, c])
        R[r] = (R[r] * inv) % p if p else R[r] * inv
        col = R[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col != 0)[0]
        if len(nzr):
            upd = np.outer(col[nzr], R[r])
            R[nzr] = (R[nzr] - upd) % p if p else R[nzr] - upd
        pivots.append(c)
        r += 1
    return R[:r], pivots


def nullspace(A, field: Field):
    """Basis (rows) of ``{z : A z = 0}``."""
    R, piv = rref(A, field)
    n = A.shape[1]
    free = [j for j in range(n) if j not in set(piv)]
    N = dense(field, (len(free), n))
    for k, j in enumerate(free):
        N[k, j] = field.one
        for i, pc in enumerate(piv):
            v = R[i, j]
            N[k, pc] = (-v) % field.p if field.p else -v
    return N


def rank(A, field: Field) -> int:
    return len(rref(A, field)[1])
