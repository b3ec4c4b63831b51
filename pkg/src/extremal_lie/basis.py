"""Monomial basis of the sandwich algebra L(0) via a truncated ideal in U."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field

from .fields import Field
from .freealg import IncrementalSpan, TruncatedGB, mu
from .graphs import SimpleGraph, nonedges
from .linalg import axpy

__all__ = ["MonomialBasis", "compute_basis"]

log = logging.getLogger(__name__)


@dataclass
class MonomialBasis:
    graph: SimpleGraph
    words: list  # left-normed monomials as tuples of generator ids
    parent: list  # (x, index of b) for [x, b]; None for generators
    # top-degree products in L(0): (x, b) -> {c: scalar} for dependent [x, b]
    graded: dict = dc_field(default_factory=dict)
    quotient_dims: list = dc_field(default_factory=list)

    def __post_init__(self):
        self.index = {w: i for i, w in enumerate(self.words)}
        self.lengths = [len(w) for w in self.words]

    def __len__(self):
        return len(self.words)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def maxlen(self) -> int:
        return max(self.lengths)

    def by_length(self, l: int) -> list:
        return [i for i, w in enumerate(self.words) if len(w) == l]

    def profile(self) -> list:
        """Number of basis elements of each length 1..maxlen."""
        return [len(self.by_length(l)) for l in range(1, self.maxlen + 1)]

    def child(self, x: int, b: int):
        """Index of [x, b] if it is a basis element."""
        return self.index.get((x,) + self.words[b])


def compute_basis(g: SimpleGraph, field: Field, max_length: int | None = None) -> MonomialBasis:
    """Monomial basis of L(0); with ``max_length`` only the words up to that length."""
    n = g.n
    gb = TruncatedGB(field, n)
    one = field.one
    init = [{(x, x): one} for x in range(n)]
    init += [mu(field, (i, j)) for i, j in nonedges(g)]
    gb.extend(init)

    words = [(x,) for x in range(n)]
    parent = [None] * n
    graded: dict = {}
    span = IncrementalSpan(field)
    nf_of: dict = {}
    gb.ensure(1)
    for i in range(n):
        nf_of[i] = gb.normal_form({(i,): one})
        span.insert(nf_of[i], 1, i)
    new = list(range(n))
    d = 1
    while new and (max_length is None or d < max_length):
        gb.extend([mu(field, (x, x) + words[b]) for b in new for x in range(n)])
        d += 1
        gb.ensure(d)
        prev, new = new, []
        for x in range(n):
            for b in prev:
                nf = {}
                for w, c in nf_of[b].items():
                    axpy(field, nf, gb._nf_word((x,) + w), c)
                    axpy(field, nf, gb._nf_word(w + (x,)), field.neg(c))
                coords = span.test(nf, d)
                if coords is None:
                    idx = len(words)
                    words.append((x,) + words[b])
                    parent.append((x, b))
                    nf_of[idx] = nf
                    span.insert(nf, d, idx)
                    new.append(idx)
                else:
                    graded[(x, b)] = coords
        log.info("length %d: %d new basis elements, dim U/I = %d", d, len(new), len(gb.normal_words[d]))
    return MonomialBasis(g, words, parent, graded, gb.quotient_dims())
