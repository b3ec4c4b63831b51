from collections import Counter
from itertools import combinations

import networkx as nx
import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from extremal_lie.fields import Field, FieldSpec, QQ
from extremal_lie.graphs import (CATALOG, DisconnectedError, LoopError, ParseError, catalog_entry, complete_graph,
                                 nonedges, parse_edges, parse_graph, serialize_graph)
from extremal_lie.linalg import SparseEchelon, nullspace, rank, rref

F101 = Field(FieldSpec("PrimeField", 101))


def test_catalog_counts():
    assert Counter(e.graph.n for e in CATALOG) == {2: 1, 3: 2, 4: 6, 5: 21}


def test_catalog_graphs_are_pairwise_non_isomorphic_and_exhaustive():
    graphs = [nx.Graph(list(e.graph.edges)) for e in CATALOG]
    for a, b in combinations(graphs, 2):
        assert not nx.is_isomorphic(a, b)
    for n in (2, 3, 4, 5):
        mine = [g for g in graphs if g.number_of_nodes() == n]
        for k in range(n - 1, n * (n - 1) // 2 + 1):
            for edges in combinations(combinations(range(n), 2), k):
                g = nx.Graph(list(edges))
                if g.number_of_nodes() == n and nx.is_connected(g):
                    assert any(nx.is_isomorphic(g, h) for h in mine)


def test_catalog_degree_sequences_match_names():
    for e in CATALOG:
        digits = e.name[1:].split("-")[0]
        assert "".join(map(str, e.graph.degree_sequence())) == digits


def test_parse_round_trip():
    g = parse_graph("4\n0-1,1-2,2-3")
    assert parse_graph(serialize_graph(g)) == g
    assert nonedges(g) == [(0, 2), (0, 3), (1, 3)]
    assert parse_edges(3, "0-1, 0-2").degree_sequence() == (2, 1, 1)
    assert catalog_entry("G3333").graph == complete_graph(4)


@pytest.mark.parametrize("text,err", [("3\n0-1", DisconnectedError), ("2\n0-0", LoopError),
                                      ("2\n0_1", ParseError), ("x\n0-1", ParseError)])
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_graph(text)


# linear algebra against sympy --------------------------------------------

mats = st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=6)


@settings(max_examples=50)
@given(mats)
def test_dense_rank_matches_sympy(rows):
    A = np.array(rows, dtype=object)
    Q = QQ()
    assert rank(np.vectorize(Q)(A), Q) == sympy.Matrix(rows).rank()
    Ap = np.array(rows, dtype=np.int64) % 101
    N = nullspace(Ap, F101)
    assert not ((Ap @ N.T) % 101).any()
    assert N.shape[0] + rank(Ap, F101) == 5


@settings(max_examples=50)
@given(mats)
def test_sparse_echelon_rank_and_dependence(rows):
    Q = QQ()
    ech = SparseEchelon(Q)
    for i, r in enumerate(rows):
        vec = {j: Q(c) for j, c in enumerate(r) if c}
        ech.add(vec, {i: Q(1)})
    assert ech.rank == sympy.Matrix(rows).rank()
    ech.back_substitute()
    for p, row in ech.rows.items():
        assert row[p] == 1
        assert all(k == p or k not in ech.rows for k in row)
        # aux tracks the combination of input rows producing this row
        comb = [0] * 5
        for i, c in ech.aux[p].items():
            for j, x in enumerate(rows[i]):
                comb[j] += c * x
        assert {j: c for j, c in enumerate(comb) if c} == row


def test_rref_reduced():
    A = np.array([[1, 2, 3], [2, 4, 7]], dtype=np.int64)
    R, piv = rref(A, F101)
    assert piv == [0, 2]
    assert R.tolist() == [[1, 2, 0], [0, 0, 1]]
