from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from indvd.complex import from_facets
from indvd.graph import Graph
from indvd.survey import fixture


def v(i: int) -> int:
    """Vertex v_i as stored in the fixtures (v_i -> i - 1)."""
    return i - 1


@pytest.fixture(scope="session")
def fig1():
    return fixture("fig1")


@pytest.fixture(scope="session")
def fig2():
    return fixture("fig2")


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


# -- face-set oracle ----------------------------------------------------------
# Complexes as explicit sets of faces, straight from the definitions.  Only
# used to cross-check the facet-based implementation.

def faces_of(facets) -> set[frozenset]:
    out = set()
    for f in facets:
        f = sorted(f)
        for k in range(len(f) + 1):
            out.update(frozenset(c) for c in itertools.combinations(f, k))
    return out


def maximal(faces) -> set[frozenset]:
    return {f for f in faces if not any(f < g for g in faces)}


def link_faces(faces, f):
    f = frozenset(f)
    return {g for g in faces if not g & f and g | f in faces}


def deletion_faces(faces, f):
    f = frozenset(f)
    return {g for g in faces if not g & f}


def facet_set(k) -> set[frozenset]:
    return set(k.facets)


def dense_rank(matrix) -> int:
    """Row reduction over GF(2) on a list-of-lists matrix."""
    m = [list(row) for row in matrix]
    rank, cols = 0, len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                m[i] = [a ^ b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def betti_oracle(facets) -> dict[int, int]:
    faces = faces_of(facets)
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    top = max(by_dim)

    def rank(d):
        if d not in by_dim or d - 1 not in by_dim:
            return 0
        lower = by_dim[d - 1]
        return dense_rank([[int(g <= f) for g in lower] for f in by_dim[d]])

    out = {}
    for d in range(-1, top + 1):
        b = len(by_dim.get(d, [])) - rank(d) - rank(d + 1)
        if b:
            out[d] = b
    return out


# -- strategies ---------------------------------------------------------------

@st.composite
def complexes(draw, max_vertex: int = 6, max_facets: int = 5):
    facets = draw(
        st.lists(st.frozensets(st.integers(0, max_vertex), max_size=max_vertex + 1), min_size=1, max_size=max_facets)
    )
    return from_facets(facets)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


# -- acceptance summary -------------------------------------------------------

CRITERIA: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        ok, detail = CRITERIA[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
