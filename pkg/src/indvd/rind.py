"""r-independence complexes Ind_r(G).

A vertex set A is r-independent when every connected component of G[A] has
at most r vertices.  ``ind_complex`` lists the maximal such sets.
"""

from __future__ import annotations

from typing import Iterable

from ._bits import iter_bits, popcount, to_mask
from .complex import EMPTY, SimplicialComplex
from .graph import Graph, _check_subset, _components_of_mask, closed_neighborhood, delete, is_connected


def _check_radius(r: int) -> int:
    if int(r) != r or r < 1:
        raise ValueError(f"radius must be a positive integer, got {r!r}")
    return int(r)


def is_r_independent(g: Graph, a: Iterable[int], r: int) -> bool:
    r = _check_radius(r)
    mask = to_mask(_check_subset(g, a))
    return all(popcount(c) <= r for c in _components_of_mask(g, mask))


def ind_complex(g: Graph, r: int) -> SimplicialComplex:
    """Facets of Ind_r(g) by depth-first augmentation with pruning.

    Vertices are decided in ascending order.  Each branch carries its own
    copy of the component map (vertex -> bit mask of its component in the
    chosen set); an include-branch is cut as soon as the merged component
    would exceed r.  Leaves are kept only after an explicit maximality test.
    """
    r = _check_radius(r)
    order = sorted(g.vertices)
    if not order:
        return EMPTY
    if len(order) <= r:
        return SimplicialComplex((g.vertex_mask,))

    nbr = {v: g.neighbor_mask(v) for v in order}
    facets: list[int] = []

    def merged(v: int, chosen: int, comp: dict[int, int]) -> int:
        m = 1 << v
        for u in iter_bits(nbr[v] & chosen):
            m |= comp[u]
        return m

    def dfs(i: int, chosen: int, comp: dict[int, int]) -> None:
        if i == len(order):
            for v in order:
                if not chosen >> v & 1 and popcount(merged(v, chosen, comp)) <= r:
                    return
            facets.append(chosen)
            return
        v = order[i]
        m = merged(v, chosen, comp)
        if popcount(m) <= r:
            comp2 = dict(comp)
            for u in iter_bits(m):
                comp2[u] = m
            dfs(i + 1, chosen | 1 << v, comp2)
        dfs(i + 1, chosen, comp)

    dfs(0, 0, {})
    return SimplicialComplex.from_masks(facets)


def ind_complex_bruteforce(g: Graph, r: int) -> SimplicialComplex:
    """Reference construction: test every subset, keep the maximal ones."""
    r = _check_radius(r)
    verts = sorted(g.vertices)
    good = []
    for bits in range(1 << len(verts)):
        a = [v for i, v in enumerate(verts) if bits >> i & 1]
        if is_r_independent(g, a, r):
            good.append(to_mask(a))
    return SimplicialComplex.from_masks(good)


def link_by_graph(g: Graph, a: Iterable[int], r: int) -> SimplicialComplex:
    """lk(A) in Ind_r(g) for a connected r-set A, read off the graph as Ind_r(g - N[A])."""
    r = _check_radius(r)
    a = _check_subset(g, a)
    if len(a) != r:
        raise ValueError(f"|A| must equal r={r}, got {len(a)}")
    if not is_connected(g, a):
        raise ValueError("A must induce a connected subgraph")
    return ind_complex(delete(g, closed_neighborhood(g, a)), r)
