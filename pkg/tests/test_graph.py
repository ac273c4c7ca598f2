import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indvd.graph import (
    Graph,
    GraphFormatError,
    canonical_tree_code,
    closed_neighborhood,
    connected_components,
    delete,
    enumerate_labeled_trees,
    format_graph,
    induced,
    is_tree,
    parse_graph,
    prufer_decode,
    prufer_encode,
    random_tree,
    root_at,
)

from conftest import graphs, path, v


def test_components_of_fig2_minus_root(fig2):
    parts = connected_components(delete(fig2, {v(1)}))
    assert parts == [
        {v(2), v(6)},
        {v(3), v(7)},
        {v(4), v(8), v(9)},
        {v(5), v(10), v(11), v(12), v(13)},
    ]


def test_components_trivial():
    assert connected_components(path(4)) == [frozenset(range(4))]
    assert connected_components(Graph(range(3))) == [{0}, {1}, {2}]
    assert connected_components(Graph()) == []


def test_induced_is_rooted_subtree(fig1):
    sub = induced(fig1, {v(2), v(4), v(5)})
    assert sub.vertices == {v(2), v(4), v(5)}
    assert sub.edges == [(v(2), v(4)), (v(2), v(5))]
    assert induced(fig1, fig1.vertices) == fig1
    assert induced(fig1, set()).vertex_count == 0


def test_induced_rejects_foreign(fig1):
    with pytest.raises(ValueError):
        induced(fig1, {99})
    with pytest.raises(ValueError):
        closed_neighborhood(fig1, {99})
    with pytest.raises(ValueError):
        delete(fig1, {99})


def test_closed_neighborhood(fig2):
    assert closed_neighborhood(fig2, {v(1), v(4)}) == {v(i) for i in (1, 2, 3, 4, 5, 8)}
    assert closed_neighborhood(fig2, set()) == set()
    assert closed_neighborhood(Graph(range(3)), {0, 2}) == {0, 2}


def test_delete_edge_cases(fig2):
    assert delete(fig2, set()) == fig2
    assert delete(fig2, fig2.vertices).vertex_count == 0


def test_is_tree(fig2):
    assert is_tree(fig2)
    assert not is_tree(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
    assert not is_tree(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert not is_tree(Graph())
    assert is_tree(Graph([0]))


def test_root_at_fig1(fig1):
    rt = root_at(fig1, v(1))
    assert rt.children[v(1)] == (v(2), v(3))
    assert rt.children[v(2)] == (v(4), v(5))
    assert rt.children[v(3)] == (v(6),)
    assert rt.parent[v(4)] == v(2)


def test_root_at_fig2_subtree_sizes(fig2):
    rt = root_at(fig2, v(1))
    assert [rt.subtree_size[v(i)] for i in (2, 3, 4, 5)] == [2, 2, 3, 5]
    assert rt.subtree_size[v(1)] == 13


def test_root_at_single_vertex():
    rt = root_at(Graph([7]), 7)
    assert rt.subtree_size == {7: 1}
    assert rt.children[7] == ()


def test_root_at_rejects():
    with pytest.raises(ValueError):
        root_at(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]), 0)
    with pytest.raises(ValueError):
        root_at(path(3), 5)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125), (6, 1296), (7, 16807)])
def test_cayley_counts(n, count):
    trees = list(enumerate_labeled_trees(n))
    assert len(trees) == count
    assert len({tuple(t.edges) for t in trees}) == count
    assert all(is_tree(t) and t.vertices == set(range(n)) for t in trees)


def test_unique_enumeration_counts():
    # unlabeled trees on n vertices: 1,1,1,2,3,6,11
    assert [len(list(enumerate_labeled_trees(n, unique=True))) for n in range(1, 8)] == [1, 1, 1, 2, 3, 6, 11]


def test_prufer_roundtrip():
    for t in enumerate_labeled_trees(5):
        assert prufer_decode(prufer_encode(t), 5) == t


def test_random_tree():
    assert random_tree(5, 3) == random_tree(5, 3)
    assert random_tree(2, 11).edges == [(0, 1)]
    assert all(is_tree(random_tree(8, s)) for s in range(100))


def test_canonical_code_is_isomorphism_invariant():
    a = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    b = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert canonical_tree_code(a) == canonical_tree_code(b) != canonical_tree_code(star)


@settings(max_examples=100, deadline=None)
@given(graphs(), st.data())
def test_delete_and_neighborhood_properties(g, data):
    a = data.draw(st.frozensets(st.sampled_from(sorted(g.vertices))) if g.vertex_count else st.just(frozenset()))
    assert not delete(g, a).vertices & a
    assert closed_neighborhood(g, a) >= a
    comps = connected_components(g)
    assert sorted(x for c in comps for x in c) == sorted(g.vertices)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10**6))
def test_rooted_tree_invariants(n, seed):
    t = random_tree(n, seed)
    for root in t.vertices:
        rt = root_at(t, root)
        for u, ch in rt.children.items():
            assert rt.subtree_size[u] == 1 + sum(rt.subtree_size[c] for c in ch)
        assert root_at(t, root) == rt


# -- text format --------------------------------------------------------------

def test_parse_and_format_roundtrip(fig2):
    assert parse_graph(format_graph(fig2, comment="fig2")) == fig2


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3 1\n0 1\n0 1\n",  # count mismatch
        "3 2\n0 1\n1 0\n",  # duplicate
        "3 1\n1 1\n",  # loop
        "3 1\n0 3\n",  # out of range
        "3 1\n0 x\n",
        "3\n",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_parse_comments():
    g = parse_graph("# hi\n2 1\n# edge\n0 1\n")
    assert g.edges == [(0, 1)]
