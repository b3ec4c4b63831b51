"""The free associative algebra U on the generators and truncated homogeneous ideals.

Words are tuples of generator ids, polynomials are dicts ``word -> scalar``.
The ideal is handled degree by degree: since it is homogeneous and two-sided,

    I_d = x * I_{d-1}  +  sum over generators g of degree k of  g * U_{d-k},

so U_d / I_d is the quotient of ``letter x normal word of degree d-1`` by the
normal forms of ``g * n`` with n a normal word of degree d-k.  The echelon form
of these rows (pivot = deglex-largest word) is the degree-d slice of the
reduced Groebner basis, up to the inter-reduction of leading words.
"""
from __future__ import annotations

from .fields import Field
from .linalg import SparseEchelon, axpy

__all__ = [
    "DegreeExceedsTruncation",
    "mu",
    "nc_mul",
    "nc_add",
    "TruncatedGB",
    "IncrementalSpan",
]


class DegreeExceedsTruncation(ValueError):
    pass


def nc_add(field: Field, *polys_and_coeffs) -> dict:
    """Linear combination ``sum c_i p_i`` given as alternating (poly, coeff)."""
    out: dict = {}
    it = iter(polys_and_coeffs)
    for p, c in zip(it, it):
        axpy(field, out, p, c)
    return out


def nc_mul(field: Field, p: dict, q: dict) -> dict:
    out: dict = {}
    norm = field.norm
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            w = w1 + w2
            s = norm(out.get(w, 0) + c1 * c2)
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return out


def mu(field: Field, m) -> dict:
    """Image of the left-normed monomial ``m`` in U: [a,b] -> ab - ba."""
    if len(m) == 1:
        return {(m[0],): field.one}
    rest = mu(field, m[1:])
    x = m[0]
    out: dict = {}
    norm = field.norm
    for w, c in rest.items():
        for key, val in (((x,) + w, c), (w + (x,), -c)):
            s = norm(out.get(key, 0) + val)
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


class TruncatedGB:
    """Truncated Groebner basis of a homogeneous two-sided ideal of U."""

    def __init__(self, field: Field, n: int):
        self.field = field
        self.n = n
        self.gens: dict = {}  # degree -> list of polys
        self.degree = 0  # slices 0..degree are final
        self.normal_words = {0: [()]}
        self._nf = {(): {(): field.one}}
        self._ech: dict = {}  # degree -> SparseEchelon of the ideal slice

    # generators ---------------------------------------------------------
    def extend(self, new_gens, d: int | None = None) -> None:
        """Add homogeneous generators, then finalise slices up to ``d``."""
        for g in new_gens:
            if not g:
                continue
            degs = {len(w) for w in g}
            if len(degs) != 1:
                raise ValueError("generator is not homogeneous")
            k = degs.pop()
            if k <= self.degree:
                raise ValueError(f"degree {k} slice already final")
            self.gens.setdefault(k, []).append(g)
        if d is not None:
            self.ensure(d)

    def ensure(self, d: int) -> None:
        while self.degree < d:
            self._build(self.degree + 1)

    def _column_vec(self, w) -> dict:
        # x * NF(tail), written in the degree-d column space
        x = w[0]
        return {(x,) + t: c for t, c in self._nf_word(w[1:]).items()}

    def _build(self, d: int) -> None:
        field = self.field
        ech = SparseEchelon(field)
        for k, gs in self.gens.items():
            if k > d:
                continue
            for g in gs:
                for nw in self.normal_words[d - k]:
                    row: dict = {}
                    for w, c in g.items():
                        axpy(field, row, self._column_vec(w + nw), c)
                    if row:
                        ech.add(row)
        ech.back_substitute()
        self._ech[d] = ech
        normal = []
        for x in range(self.n):
            for t in self.normal_words[d - 1]:
                w = (x,) + t
                if w not in ech.rows:
                    normal.append(w)
        self.normal_words[d] = normal
        self.degree = d

    # normal forms -------------------------------------------------------
    def _nf_word(self, w) -> dict:
        hit = self._nf.get(w)
        if hit is not None:
            return hit
        d = len(w)
        if d > self.degree:
            raise DegreeExceedsTruncation(f"word of degree {d} beyond truncation {self.degree}")
        vec = self._column_vec(w)
        rows = self._ech[d].rows
        out: dict = {}
        for col, c in vec.items():
            row = rows.get(col)
            if row is None:
                axpy(self.field, out, {col: c}, self.field.one)
            else:
                tail = {k: v for k, v in row.items() if k != col}
                axpy(self.field, out, tail, self.field.neg(c))
        self._nf[w] = out
        return out

    def normal_form(self, p: dict) -> dict:
        out: dict = {}
        for w, c in p.items():
            axpy(self.field, out, self._nf_word(w), c)
        return out

    def leading_words(self, d: int) -> list:
        return sorted(self._ech[d].rows)

    def basis_elements(self) -> list:
        """Reduced GB elements: slice rows whose leading word has no proper leading subword."""
        leads = set()
        out = []
        for d in range(1, self.degree + 1):
            for lw in sorted(self._ech[d].rows):
                if any(lw[i:j] in leads for i in range(d) for j in range(i + 1, d + 1) if j - i < d):
                    continue
                row = self._ech[d].rows[lw]
                out.append(row)
            leads.update(self._ech[d].rows)
        return out

    def dump(self) -> str:
        """One polynomial per line, words as generator-id strings."""
        lines = []
        for g in self.basis_elements():
            terms = sorted(g.items(), reverse=True)
            lines.append(" + ".join(f"{self.field.to_str(c)}*{''.join(map(str, w))}" for w, c in terms))
        return "\n".join(lines)

    def quotient_dims(self) -> list:
        return [len(self.normal_words[d]) for d in range(self.degree + 1)]


class IncrementalSpan:
    """Per-degree echelon span of normal forms, tracking coordinates in the spanning set."""

    def __init__(self, field: Field):
        self.field = field
        self._by_degree: dict = {}

    def test(self, nf: dict, degree: int):
        """Coordinates of ``nf`` if dependent, else ``None``."""
        ech = self._by_degree.get(degree)
        if ech is None:
            return None if nf else {}
        r, a = ech.reduce(nf, {})
        if r:
            return None
        return {k: self.field.neg(v) for k, v in a.items() if v}

    def insert(self, nf: dict, degree: int, label) -> None:
        ech = self._by_degree.setdefault(degree, SparseEchelon(self.field))
        r, a = ech.reduce(nf, {label: self.field.one})
        if not r:
            raise ValueError("inserting a dependent element")
        ech.insert(r, a)
