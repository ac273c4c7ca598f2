import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indvd.complex import EMPTY, deletion, is_face, join, link
from indvd.graph import Graph, delete, disjoint_union, is_connected, random_graph, random_tree, relabel
from indvd.rind import ind_complex, ind_complex_bruteforce, is_r_independent, link_by_graph

from conftest import facet_set, graphs, path, v


def test_is_r_independent(fig2):
    assert not is_r_independent(fig2, {v(1), v(2), v(6), v(3), v(7)}, 4)
    assert not is_r_independent(path(3), {0, 1, 2}, 2)
    assert is_r_independent(fig2, set(), 1)
    with pytest.raises(ValueError):
        is_r_independent(fig2, {50}, 1)
    with pytest.raises(ValueError):
        is_r_independent(fig2, {0}, 0)


def test_ind_complex_small():
    assert facet_set(ind_complex(path(3), 2)) == {frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})}
    assert ind_complex(path(2), 1).facets == [{0}, {1}]
    assert ind_complex(Graph(), 3) == EMPTY


def test_ind_complex_small_tree_is_simplex():
    for seed in range(20):
        t = random_tree(4, seed)
        assert ind_complex(t, 4).facets == [frozenset(range(4))]
        assert ind_complex(t, 9).facets == [frozenset(range(4))]


def test_link_by_graph_examples():
    assert link_by_graph(path(5), {0, 1}, 2).facets == [{3, 4}]
    assert link_by_graph(path(4), {1, 2}, 2) == EMPTY
    g = Graph.from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 5)])
    assert link_by_graph(g, {0, 1}, 2) == ind_complex(delete(g, {0, 1}), 2)


def test_link_by_graph_rejects():
    with pytest.raises(ValueError):
        link_by_graph(path(5), {0, 2}, 2)
    with pytest.raises(ValueError):
        link_by_graph(path(5), {0}, 2)


@pytest.mark.parametrize("n", range(0, 7))
def test_dfs_matches_powerset_on_all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    step = max(1, (1 << len(pairs)) // 300)
    for bits in range(0, 1 << len(pairs), step):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
        for r in range(1, n + 1):
            assert ind_complex(g, r) == ind_complex_bruteforce(g, r)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), graphs(max_n=8), st.integers(1, 4))
def test_disjoint_union_is_join(g1, g2, r):
    g2 = relabel(g2, 10)
    assert ind_complex(disjoint_union(g1, g2), r) == join(ind_complex(g1, r), ind_complex(g2, r))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=10), st.integers(1, 4))
def test_deletion_lemma(g, r):
    k = ind_complex(g, r)
    for x in g.vertices:
        assert deletion(k, {x}) == ind_complex(delete(g, {x}), r)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=9), st.integers(1, 4))
def test_link_lemma(g, r):
    k = ind_complex(g, r)
    for a in itertools.combinations(sorted(g.vertices), r):
        if is_connected(g, a):
            assert link(k, a) == link_by_graph(g, a, r)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9), st.integers(1, 4))
def test_monotone_and_covering(g, r):
    k, k_next = ind_complex(g, r), ind_complex(g, r + 1)
    assert all(is_face(k_next, f) for f in k.facets)
    assert k.vertices == g.vertices


def test_seeded_random_graphs_dense():
    for seed in range(30):
        g = random_graph(9, 0.5, seed)
        for r in (1, 2, 3):
            assert ind_complex(g, r) == ind_complex_bruteforce(g, r)
