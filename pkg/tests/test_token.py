import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from brouwer_excess.errors import CapExceededError
from brouwer_excess.graphs import Graph, complete, cycle, empty, erdos_renyi, path, star
from brouwer_excess.spectral import eigenvalues_sym, laplacian, signless_laplacian
from brouwer_excess.token import (
    token_degrees, token_graph, token_laplacian, token_matrix, token_signless_laplacian,
)

from oracles import brute_token_edges

graphs_st = st.integers(1, 7).flatmap(
    lambda n: st.integers(0, (1 << (n * (n - 1) // 2)) - 1).map(lambda m: Graph.from_mask(n, m)))


def test_path3_order2_by_hand():
    # subsets 01, 02, 12: 01~02 via edge 12, 02~12 via edge 01, 01 and 12 differ by 02
    t = token_graph(path(3), 2)
    assert t.graph == Graph(3, ((0, 1), (1, 2)))
    assert t.indexer.subsets == [(0, 1), (0, 2), (1, 2)]


def test_order1_is_the_graph():
    for g in [path(4), cycle(5), complete(4), erdos_renyi(7, 0.5, 3)]:
        assert token_graph(g, 1).graph == g
        assert np.array_equal(token_laplacian(g, 1), laplacian(g))
        assert np.array_equal(token_signless_laplacian(g, 1), signless_laplacian(g))


def test_order0_and_order_n_are_single_vertices():
    g = cycle(4)
    for k in (0, 4):
        assert token_graph(g, k).graph == Graph(1)
        assert np.array_equal(token_laplacian(g, k), np.zeros((1, 1)))


def test_star_order2_is_subdivided_k4():
    # [[3I, B], [B^T, 2I]] with B B^T = Q(K_4), top eigenvalue solves (x-3)(x-2) = 6
    w = eigenvalues_sym(token_laplacian(star(5), 2))
    assert w[0] == pytest.approx(5.0, abs=1e-10)


def test_empty_graph():
    for k in range(5):
        assert token_graph(empty(4), k).graph.m == 0


@settings(max_examples=80)
@given(graphs_st, st.data())
def test_edges_match_symmetric_difference_rule(g, data):
    k = data.draw(st.integers(0, g.n))
    t = token_graph(g, k)
    assert list(t.graph.edges) == brute_token_edges(g, k)


@settings(max_examples=80)
@given(graphs_st, st.data())
def test_matrices_match_built_graph(g, data):
    k = data.draw(st.integers(0, g.n))
    t = token_graph(g, k).graph
    assert np.array_equal(token_laplacian(g, k), laplacian(t))
    assert np.array_equal(token_signless_laplacian(g, k), signless_laplacian(t))
    assert np.array_equal(token_degrees(g, k), np.array(t.degrees, dtype=float))


@settings(max_examples=50)
@given(graphs_st, st.data())
def test_complement_order_has_same_spectrum(g, data):
    k = data.draw(st.integers(0, g.n))
    for fam in ("laplacian", "signless"):
        a = eigenvalues_sym(token_matrix(g, k, fam))
        b = eigenvalues_sym(token_matrix(g, g.n - k, fam))
        assert np.allclose(a, b, atol=1e-9)


def test_errors():
    with pytest.raises(ValueError):
        token_graph(path(3), 4)
    with pytest.raises(ValueError):
        token_matrix(path(3), 1, "adjacency")
    with pytest.raises(CapExceededError):
        token_laplacian(empty(20), 10, cap=1000)
