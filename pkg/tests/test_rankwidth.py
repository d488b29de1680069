import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import C4, P4
from letterkit.graph import Graph, SizeCapError, complement, complete_graph, empty_graph, path_graph
from letterkit.obstructions import enumerate_graphs
from letterkit.rankwidth import cut_matrix, cutrank, gf2_rank, linear_rankwidth_exact, order_width
from oracles import brute_lrw, dense_cutrank, gf2_rank_dense, labelled_graphs
from test_graph import graphs

K33 = Graph.from_edges(6, [(x, y) for x in range(3) for y in range(3, 6)])


def test_cutrank_examples():
    assert cutrank(K33, 0b000111) == 1
    assert cutrank(P4, 0) == 0
    assert cutrank(P4, P4.full) == 0
    assert cutrank(P4, 0b0011) == 1
    assert cutrank(C4, 0b0011) == 2


def test_cut_matrix_rows():
    assert cut_matrix(P4, 0b0011) == [0, 0b0100]


@given(st.lists(st.integers(0, 63), max_size=7))
def test_gf2_rank_matches_dense_elimination(rows):
    dense = [[(r >> c) & 1 for c in range(6)] for r in rows]
    assert gf2_rank(rows) == gf2_rank_dense(dense)


def test_order_width_examples():
    for n in range(2, 9):
        assert order_width(path_graph(n), list(range(n))) == 1
        for order in itertools.islice(itertools.permutations(range(n)), 0, None, 97):
            assert order_width(complete_graph(n), order) == 1
    c4_width = max(dense_cutrank(C4, (0, 2, 1, 3)[:i]) for i in range(1, 4))
    assert c4_width == 1
    assert order_width(C4, [0, 2, 1, 3]) == c4_width
    assert order_width(C4, [0, 1, 2, 3]) == 2


def test_order_width_rejects_non_bijection():
    with pytest.raises(ValueError):
        order_width(P4, [0, 1, 1, 3])


def test_linear_rankwidth_examples():
    assert linear_rankwidth_exact(empty_graph(5))[0] == 0
    assert linear_rankwidth_exact(Graph(0, ())) == (0, [])
    for n in range(2, 11):
        assert linear_rankwidth_exact(path_graph(n))[0] == 1


def test_linear_rankwidth_matches_factorial_oracle():
    for n in range(1, 6):
        # one graph per class on 5 vertices; the width is an isomorphism invariant
        for g in labelled_graphs(n) if n < 5 else enumerate_graphs(5):
            value, order = linear_rankwidth_exact(g)
            assert value == brute_lrw(g)
            assert order_width(g, order) == value


def test_linear_rankwidth_cap():
    with pytest.raises(SizeCapError):
        linear_rankwidth_exact(Graph(17, (0,) * 17))


@given(graphs(max_n=7), st.integers(0, 127))
def test_cutrank_properties(g, x):
    x &= g.full
    r = cutrank(g, x)
    assert r == dense_cutrank(g, [v for v in range(g.n) if (x >> v) & 1])
    assert r == cutrank(g, g.full & ~x)
    assert cutrank(complement(g), x) <= r + 1
