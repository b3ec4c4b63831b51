"""Input graphs: validated simple connected graphs and the built-in catalog."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "GraphError",
    "ParseError",
    "LoopError",
    "DisconnectedError",
    "SimpleGraph",
    "parse_graph",
    "parse_edges",
    "complete_graph",
    "nonedges",
    "serialize_graph",
    "CatalogEntry",
    "CATALOG",
    "catalog_entry",
]


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    pass


class LoopError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices ``0..n-1``; the id order is the vertex order."""

    n: int
    edges: frozenset  # of (i, j) with i < j

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        adj = [set() for _ in range(self.n)]
        for i, j in self.edges:
            if not (0 <= i < j < self.n):
                raise GraphError(f"bad edge {(i, j)}")
            adj[i].add(j)
            adj[j].add(i)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))
        seen, stack = {0}, [0]
        while stack:
            v = stack.pop()
            for w in adj[v] - seen:
                seen.add(w)
                stack.append(w)
        if len(seen) != self.n:
            raise DisconnectedError(f"vertices {sorted(set(range(self.n)) - seen)} unreachable")

    @property
    def vertices(self) -> range:
        return range(self.n)

    def adjacent(self, i: int, j: int) -> bool:
        return j in self._adj[i]

    def neighbours(self, i: int) -> frozenset:
        return self._adj[i]

    def degree_sequence(self) -> tuple:
        return tuple(sorted((len(a) for a in self._adj), reverse=True))

    def permuted(self, perm) -> "SimpleGraph":
        """Relabel vertex ``v`` as ``perm[v]``."""
        return SimpleGraph(self.n, frozenset(tuple(sorted((perm[i], perm[j]))) for i, j in self.edges))


def _make(n: int, pairs) -> SimpleGraph:
    edges = set()
    for i, j in pairs:
        if i == j:
            raise LoopError(f"loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"edge {i}-{j} out of range for n={n}")
        e = (min(i, j), max(i, j))
        if e in edges:
            warnings.warn(f"duplicate edge {i}-{j} ignored", stacklevel=3)
        edges.add(e)
    return SimpleGraph(n, frozenset(edges))


def parse_edges(n: int, text: str) -> SimpleGraph:
    """Build a graph from a comma separated ``i-j`` list."""
    pairs = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        parts = tok.split("-")
        if len(parts) != 2:
            raise ParseError(f"malformed edge {tok!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"malformed edge {tok!r}") from None
    return _make(n, pairs)


def parse_graph(text: str) -> SimpleGraph:
    """Parse the edge-list format: vertex count on line one, edges on line two."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty graph description")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"bad vertex count {lines[0]!r}") from None
    if len(lines) > 2:
        raise ParseError("expected at most two lines")
    return parse_edges(n, lines[1] if len(lines) == 2 else "")


def serialize_graph(g: SimpleGraph) -> str:
    return f"{g.n}\n" + ",".join(f"{i}-{j}" for i, j in sorted(g.edges))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(combinations(range(n), 2)))


def nonedges(g: SimpleGraph) -> list:
    return [(i, j) for i, j in combinations(range(g.n), 2) if not g.adjacent(i, j)]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: SimpleGraph
    # admissible (dim X, dim L(0)) pairs
    expected: tuple
    quotient: tuple  # admissible (dim L/Rad L, type label) pairs
    heavy: bool = False


def _entry(name, n, edges, expected, quotient, heavy=False):
    g = _make(n, edges)
    return CatalogEntry(name, g, tuple(expected), tuple(quotient), heavy)


# (dim X, dim L(0)) and generic L/Rad(L) per the published tables.  Degree
# sequences 32221 and 33222 each name two graphs; the published rows were
# assigned to them by direct computation.
CATALOG = (
    _entry("G11", 2, [(0, 1)], [(1, 3)], [(3, "A1")]),
    _entry("G211", 3, [(0, 1), (0, 2)], [(2, 6)], [(3, "A1")]),
    _entry("G222", 3, [(0, 1), (0, 2), (1, 2)], [(4, 8)], [(8, "A2")]),
    _entry("G3111", 4, [(0, 3), (1, 3), (2, 3)], [(3, 12)], [(3, "A1")]),
    _entry("G2211", 4, [(0, 1), (0, 3), (1, 2)], [(3, 10)], [(10, "B2")]),
    _entry("G2222", 4, [(0, 1), (0, 3), (1, 2), (2, 3)], [(5, 15)], [(15, "A3")]),
    _entry("G3221", 4, [(0, 3), (1, 2), (1, 3), (2, 3)], [(5, 15)], [(15, "A3")]),
    _entry("G3322", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)], [(8, 21)], [(21, "B3")]),
    _entry("G3333", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], [(12, 28)], [(28, "D4")]),
    _entry("G41111", 5, [(0, 4), (1, 4), (2, 4), (3, 4)], [(5, 28)], [(28, "D4")]),
    _entry("G32111", 5, [(0, 4), (1, 3), (2, 3), (3, 4)], [(4, 20)], [(10, "B2")]),
    _entry("G22211", 5, [(0, 1), (0, 4), (1, 2), (2, 3)], [(4, 15)], [(10, "B2")]),
    _entry("G42211", 5, [(0, 4), (1, 4), (2, 3), (2, 4), (3, 4)], [(7, 36)], [(36, "B4")]),
    _entry("G33211", 5, [(0, 1), (0, 2), (0, 4), (1, 2), (2, 3)], [(6, 30)], [(15, "A3")]),
    _entry("G32221-tail", 5, [(0, 4), (1, 2), (1, 3), (2, 3), (3, 4)],
           [(6, 24)], [(24, "A4")]),
    _entry("G32221-square", 5, [(0, 1), (1, 3), (1, 4), (2, 3), (2, 4)],
           [(6, 30)], [(15, "A3")]),
    _entry("G22222", 5, [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)], [(6, 24)], [(24, "A4")]),
    _entry("G43221", 5, [(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)], [(10, 52)], [(52, "F4")]),
    _entry("G33321", 5, [(0, 1), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], [(9, 45)], [(45, "D5")]),
    _entry("G42222", 5, [(0, 1), (0, 4), (1, 4), (2, 3), (2, 4), (3, 4)], [(9, 45)], [(45, "D5")]),
    _entry("G33222-house", 5, [(0, 1), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)],
           [(9, 45)], [(45, "D5")]),
    _entry("G33222-K23", 5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
           [(10, 52)], [(52, "F4")]),
    _entry("G43331", 5, [(0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], [(14, 78)], [(78, "E6")]),
    _entry("G44222", 5, [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], [(13, 86)], [(28, "D4")]),
    _entry("G43322", 5, [(0, 1), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)], [(14, 78)], [(78, "E6")]),
    _entry("G33332", 5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4)], [(14, 78)], [(78, "E6")]),
    _entry("G44332", 5, [(0, 1), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
           [(12, 134)], [(28, "D4")], heavy=True),
    _entry("G43333", 5, [(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3), (2, 4), (3, 4)],
           [(21, 133)], [(133, "E7")], heavy=True),
    _entry("G44433", 5, [(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
           [(21, 249)], [(78, "E6")], heavy=True),
    _entry("G44444", 5, list(combinations(range(5), 2)), [(0, 537)], [(0, "trivial")], heavy=True),
)


def catalog_entry(name: str) -> CatalogEntry:
    for e in CATALOG:
        if e.name == name:
            return e
    raise KeyError(f"no catalog graph named {name!r}")
