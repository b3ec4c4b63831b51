"""Concrete Lie algebras from the generic table, checks, and the radical survey."""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .fields import Field, FieldSpec
from .fset import FSetState
from .graphs import nonedges
from .linalg import dense, nullspace, rank, rref
from .table import MultTable

__all__ = [
    "VerificationFailure",
    "LieAlgebraK",
    "specialize",
    "verify_lie",
    "killing_form",
    "radical_dimension",
    "quotient_algebra",
    "rank_estimate",
    "classify_quotient",
    "lower_central_series",
    "analyze",
    "generic_survey",
    "TYPES",
]

# dimension -> (label, rank) of the simple types met in the catalog
TYPES = {
    3: ("A1", 1), 8: ("A2", 2), 10: ("B2", 2), 15: ("A3", 3), 21: ("B3", 3), 24: ("A4", 4),
    28: ("D4", 4), 36: ("B4", 4), 45: ("D5", 5), 52: ("F4", 4), 78: ("E6", 6), 133: ("E7", 7),
}


class VerificationFailure(AssertionError):
    def __init__(self, msg, triple=None):
        super().__init__(msg)
        self.triple = triple


def _mod(field: Field, A):
    return A % field.p if field.p else A


def _matmul(field: Field, A, B):
    """Exact product; falls back to object arithmetic if int64 could overflow."""
    if A.dtype == np.int64:
        k = A.shape[-1]
        if (field.p - 1) ** 2 * max(k, 1) < 2**63:
            return (A @ B) % field.p
        return (A.astype(object) @ B.astype(object)) % field.p
    return _mod(field, A @ B)


@dataclass
class LieAlgebraK:
    """Structure constants as adjoint matrices: ``ad[i][k, j]`` is the e_k coefficient of [e_i, e_j]."""

    field: Field
    ad: np.ndarray
    labels: list

    @property
    def dim(self) -> int:
        return self.ad.shape[0]

    def bracket(self, u, v):
        """[u, v] for coordinate vectors."""
        out = dense(self.field, (self.dim,))
        for i in np.nonzero(u)[0]:
            out = _mod(self.field, out + u[i] * _matmul(self.field, self.ad[i], v))
        return out

    def ad_of(self, u):
        M = dense(self.field, (self.dim, self.dim))
        for i in np.nonzero(u)[0]:
            M = _mod(self.field, M + u[i] * self.ad[i])
        return M

    def structure_constants(self) -> dict:
        """Sparse ``(i, j) -> {k: c}`` for i < j."""
        out = {}
        d = self.dim
        for i in range(d):
            for j in range(i + 1, d):
                col = self.ad[i][:, j]
                nz = np.nonzero(col)[0]
                if len(nz):
                    out[(i, j)] = {int(k): col[k] for k in nz}
        return out


def specialize(table: MultTable, state: FSetState, values: dict, field: Field | None = None) -> LieAlgebraK:
    """Evaluate every table entry at ``f[y][c] -> values[id]`` (ids of the surviving F)."""
    K = field or table.field
    B = table.basis
    d = len(B)
    n = B.n
    gen = []
    for x in range(n):
        M = dense(K, (d, d))
        for b in range(d):
            for c, p in table.entries[(x, b)].items():
                M[c, b] = p.evaluate(values, K)
        gen.append(M)
    ad = dense(K, (d, d, d))
    for b in range(d):
        par = B.parent[b]
        if par is None:
            ad[b] = gen[b]
        else:
            y, bp = par
            ad[b] = _mod(K, _matmul(K, ad[y], ad[bp]) - _matmul(K, ad[bp], ad[y]))
    return LieAlgebraK(K, ad, [list(w) for w in B.words])


def _jacobi_exhaustive(L: LieAlgebraK) -> None:
    """ad is a homomorphism on basis pairs, and the bracket is alternating."""
    K, ad, d = L.field, L.ad, L.dim
    for i in range(d):
        # ad_[e_i,e_j] = sum_k ad_i[k, j] ad_k
        lhs = np.tensordot(ad[i].T, ad, axes=(1, 0))
        if ad.dtype == np.int64 and (K.p - 1) ** 2 * d >= 2**63:
            lhs = np.tensordot(ad[i].T.astype(object), ad.astype(object), axes=(1, 0))
        lhs = _mod(K, lhs)
        if ad[i][:, i].any():
            raise VerificationFailure(f"[e_{i}, e_{i}] is nonzero", (i, i))
        for j in range(d):
            if _mod(K, ad[i][:, j] + ad[j][:, i]).any():
                raise VerificationFailure(f"antisymmetry fails at ({i},{j})", (i, j))
            comm = _mod(K, _matmul(K, ad[i], ad[j]) - _matmul(K, ad[j], ad[i]))
            if _mod(K, lhs[j] - comm).any():
                raise VerificationFailure(f"Jacobi fails for ({i},{j},*)", (i, j))


def _jacobi_sampled(L: LieAlgebraK, samples: int, rng) -> None:
    d, K = L.dim, L.field
    for _ in range(samples):
        a, b, c = (rng.randrange(d) for _ in range(3))
        ea, eb, ec = _unit(K, d, a), _unit(K, d, b), _unit(K, d, c)
        s = L.bracket(ea, L.bracket(eb, ec)) + L.bracket(eb, L.bracket(ec, ea)) + L.bracket(ec, L.bracket(ea, eb))
        if _mod(K, s).any():
            raise VerificationFailure(f"Jacobi fails for {(a, b, c)}", (a, b, c))


def _unit(K, d, i):
    u = dense(K, (d,))
    u[i] = K.one
    return u


def verify_lie(L: LieAlgebraK, table: MultTable, state: FSetState, values: dict,
               exhaustive_bound: int = 60, samples: int = 10000, seed: int = 0) -> list:
    """Jacobi, extremality of every generator, and commuting of non-adjacent generators."""
    K = L.field
    g = table.basis.graph
    passed = []
    if L.dim <= exhaustive_bound:
        _jacobi_exhaustive(L)
        passed.append("jacobi-exhaustive")
    else:
        _jacobi_sampled(L, samples, random.Random(seed))
        passed.append(f"jacobi-sampled-{samples}")
    for x in range(g.n):
        sq = _matmul(K, L.ad[x], L.ad[x])
        for b in range(L.dim):
            f = state.value(x, b).evaluate(values, K)
            want = _mod(K, _unit(K, L.dim, x) * f)
            if _mod(K, sq[:, b] - want).any():
                raise VerificationFailure(f"extremality fails for generator {x} on basis {b}", (x, x, b))
    passed.append("extremality")
    for i, j in nonedges(g):
        if (L.ad[i][:, j] != 0).any():
            raise VerificationFailure(f"generators {i} and {j} do not commute", (i, j))
    passed.append("nonedge-commutation")
    return passed


def killing_form(L: LieAlgebraK):
    K, d = L.field, L.dim
    A = L.ad.reshape(d, d * d)
    Bt = L.ad.transpose(0, 2, 1).reshape(d, d * d)
    return _matmul(K, A, Bt.T)


def _span(K: Field, rows):
    R, piv = rref(rows, K)
    return R


def _derived(L: LieAlgebraK, sub=None):
    """Basis rows of [S, S] (S = L when ``sub`` is None)."""
    K, d = L.field, L.dim
    if sub is None:
        vecs = L.ad.transpose(0, 2, 1).reshape(d * d, d)
    else:
        adS = np.stack([L.ad_of(u) for u in sub]) if len(sub) else np.zeros((0, d, d), dtype=L.ad.dtype)
        vecs = np.concatenate([_matmul(K, adS[i], sub.T).T for i in range(len(sub))]) if len(sub) else \
            dense(K, (0, d))
    if vecs.shape[0] == 0:
        return vecs
    return _span(K, vecs)


def quotient_algebra(L: LieAlgebraK, R) -> LieAlgebraK:
    """L/R for an ideal spanned by the rows of ``R``; coordinates on non-pivot basis vectors."""
    K, d = L.field, L.dim
    if R.shape[0] == 0:
        return L
    Rr, piv = rref(R, K)
    keep = [j for j in range(d) if j not in set(piv)]
    q = len(keep)

    def proj(v):
        v = v.copy()
        for i, pc in enumerate(piv):
            if v[pc]:
                v = _mod(K, v - v[pc] * Rr[i])
        return v[keep]

    ad = dense(K, (q, q, q))
    for a, i in enumerate(keep):
        for b, j in enumerate(keep):
            ad[a][:, b] = proj(L.ad[i][:, j])
    return LieAlgebraK(K, ad, [L.labels[i] for i in keep])


def radical_dimension(L: LieAlgebraK):
    """Killing-orthogonal of [L, L]; validated in positive characteristic.

    Returns ``(dim or "undetermined", method, radical rows)``.
    """
    K, d = L.field, L.dim
    if d == 0:
        return 0, "empty", dense(K, (0, 0))
    D = _derived(L)
    kap = killing_form(L)
    Rrows = nullspace(_matmul(K, D, kap), K) if D.shape[0] else _eye(K, d)
    r = Rrows.shape[0]
    if not K.p:
        return r, "killing-perp", Rrows
    # ideal: generators preserve R
    for x in range(L.ad.shape[0]):
        img = _matmul(K, L.ad[x], Rrows.T).T
        if rank(np.concatenate([Rrows, img]), K) != r:
            return "undetermined", "not-an-ideal", Rrows
    # solvable
    S = Rrows
    for _ in range(d + 1):
        if S.shape[0] == 0:
            break
        S2 = _derived(L, S)
        if S2.shape[0] == S.shape[0]:
            return "undetermined", "not-solvable", Rrows
        S = S2
    # quotient perfect with nondegenerate Killing form
    if r < d:
        if rank(np.concatenate([D, Rrows]), K) != d:
            return "undetermined", "quotient-not-perfect", Rrows
        Q = quotient_algebra(L, Rrows)
        if rank(killing_form(Q), K) != Q.dim:
            return "undetermined", "quotient-killing-degenerate", Rrows
    return r, "killing-perp-validated", Rrows


def _eye(K, d):
    E = dense(K, (d, d))
    for i in range(d):
        E[i, i] = K.one
    return E


def rank_estimate(L: LieAlgebraK, rng, tries: int = 5) -> int:
    """Minimum over random z of the nilspace dimension of ad z."""
    K, d = L.field, L.dim
    if d == 0:
        return 0
    best = d
    for _ in range(tries):
        z = np.array([K.random(rng) for _ in range(d)], dtype=L.ad.dtype)
        M = L.ad_of(z)
        P = M
        e = 1
        while e < d:
            P = _matmul(K, P, P)
            e *= 2
        best = min(best, d - rank(P, K))
    return best


def classify_quotient(dim, rank_est) -> str:
    if dim == 0:
        return "trivial"
    t = TYPES.get(dim)
    if t is None or (rank_est is not None and t[1] != rank_est):
        return "unclassified"
    return t[0]


def lower_central_series(L: LieAlgebraK) -> list:
    """Dimensions of L = L^1 > L^2 > ... until it stabilises."""
    K, d = L.field, L.dim
    dims = [d]
    cur = _eye(K, d)
    while cur.shape[0]:
        vecs = np.concatenate([_matmul(K, L.ad[i], cur.T).T for i in range(d)])
        nxt = _span(K, vecs)
        if nxt.shape[0] == cur.shape[0]:
            break
        dims.append(nxt.shape[0])
        cur = nxt
    return dims


def analyze(L: LieAlgebraK, seed: int = 0, checks=()) -> dict:
    """Radical, quotient and type label.  The rank cross-check runs over GF(p) only."""
    r, method, R = radical_dimension(L)
    rep = {"dim": L.dim, "radicalDim": r, "quotientDim": r, "typeLabel": "unclassified",
           "rank": None, "method": method, "checksPassed": list(checks)}
    if r == "undetermined":
        return rep
    q = L.dim - r
    rk = None
    if q and L.field.p:
        rk = rank_estimate(quotient_algebra(L, R), random.Random(seed))
    rep.update(quotientDim=q, rank=rk if q else 0, typeLabel=classify_quotient(q, rk))
    return rep


def generic_survey(table: MultTable, state: FSetState, p: int, trials: int = 20, seed: int = 0) -> dict:
    """Random specialisations over GF(p); majority (quotient dim, type) and its frequency."""
    K = Field(FieldSpec("PrimeField", p), harvesting=False)
    rng = random.Random(seed)
    tally: Counter = Counter()
    runs = []
    for t in range(trials):
        values = {v: K.random(rng) for v in state.F}
        L = specialize(table, state, values, K)
        rep = analyze(L, seed=rng.randrange(2**32))
        key = (rep["quotientDim"], rep["typeLabel"])
        tally[key] += 1
        runs.append(rep)
    (qd, label), count = tally.most_common(1)[0]
    return {"field": f"gf:{p}", "trials": trials, "seed": seed, "quotientDim": qd, "typeLabel": label,
            "frequency": count / trials, "tally": {f"{k[0]}:{k[1]}": c for k, c in sorted(tally.items(), key=str)}}
