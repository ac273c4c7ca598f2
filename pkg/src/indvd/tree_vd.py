"""Constructive vertex decomposition of Ind_r for trees and forests.

The recursion mirrors the inductive argument:

* a forest is the join of its components;
* a tree on at most r vertices gives a simplex;
* otherwise a shedding vertex v is found by descending from a root, the
  deletion is Ind_r(T - v), and the link of v is handled by
  :func:`_decompose_link`, which grows a connected face C around v one
  shedding vertex at a time until |C| = r, where the link becomes
  Ind_r(T - N[C]).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import SimplicialComplex, link
from .graph import (
    Graph,
    closed_neighborhood,
    connected_components,
    delete,
    induced,
    is_connected,
    is_forest,
    is_tree,
    root_at,
)
from .oracle import (
    Certificate,
    JoinNode,
    ShedNode,
    SimplexLeaf,
    certificate_link,
    certified_complex,
    shedding_vertices,
)
from .rind import _check_radius, ind_complex, is_r_independent


@dataclass(frozen=True)
class LinkState:
    """A connected face ``c`` of Ind_r(tree) grown around the shedding vertex ``anchor``."""

    tree: Graph
    c: frozenset[int]
    anchor: int
    radius: int

    def __post_init__(self):
        if self.anchor not in self.c:
            raise ValueError("anchor must belong to C")
        if not self.c <= self.tree.vertices:
            raise ValueError("C must be a vertex subset of the tree")
        if len(self.c) > self.radius:
            raise ValueError("|C| must not exceed r")
        if not is_connected(self.tree, self.c):
            raise ValueError("C must induce a connected subgraph")


def _require_big_tree(t: Graph, r: int) -> int:
    r = _check_radius(r)
    if not is_tree(t):
        raise ValueError("input must be a tree")
    if t.vertex_count <= r:
        raise ValueError(f"tree has {t.vertex_count} <= r={r} vertices")
    return r


def shedding_characterization(t: Graph, r: int, v: int) -> bool:
    """Rooted-subtree test for v being a shedding vertex of Ind_r(t).

    Root at v and add up the sizes of the child subtrees with at most r
    vertices; v is shedding iff that total plus one reaches r + 1.
    """
    r = _require_big_tree(t, r)
    if v not in t.vertices:
        raise ValueError(f"{v} is not a vertex of the tree")
    rt = root_at(t, v)
    small = sum(s for s in (rt.subtree_size[u] for u in rt.children[v]) if s <= r)
    return 1 + small >= r + 1


def find_shedding_vertex(t: Graph, r: int) -> int:
    r = _require_big_tree(t, r)
    rt = root_at(t, min(t.vertices))
    v = rt.root
    while True:
        heavy = [u for u in rt.children[v] if rt.subtree_size[u] >= r + 1]
        if not heavy:
            return v
        v = heavy[0]


def link_shedding_vertex(state: LinkState) -> int:
    """A shedding vertex w of link(Ind_r(T), C) with C + w still connected.

    Root at the anchor, let S be the union of the anchor's child subtrees of
    size at most r, and take the vertex of S outside C whose own subtree is
    largest (smallest label on ties).
    """
    t, c, r = state.tree, state.c, state.radius
    if len(c) >= r:
        raise ValueError("link_shedding_vertex needs |C| <= r - 1")
    if not shedding_characterization(t, r, state.anchor):
        raise ValueError(f"anchor {state.anchor} is not a shedding vertex of Ind_{r}")
    rt = root_at(t, state.anchor)
    s: set[int] = set()
    for u in rt.children[state.anchor]:
        if rt.subtree_size[u] <= r:
            s |= rt.subtree_vertices(u)
    candidates = s - c
    return min(candidates, key=lambda x: (-rt.subtree_size[x], x))


def expand_link_state(state: LinkState) -> SimplicialComplex:
    return link(ind_complex(state.tree, state.radius), state.c)


# -- recursion ----------------------------------------------------------------

@dataclass
class Step:
    """One recursion state, for tracing and export."""

    id: int
    parent: int | None
    kind: str  # "empty" | "forest" | "simplex" | "shed" | "link-shed" | "link-full"
    vertices: frozenset[int]
    vertex: int | None = None
    c: frozenset[int] | None = None
    anchor: int | None = None
    radius: int | None = None


@dataclass
class Trace:
    steps: list[Step] = field(default_factory=list)
    _graphs: dict[int, Graph] = field(default_factory=dict, repr=False)

    def add(self, parent: int | None, kind: str, g: Graph, **kw) -> int:
        sid = len(self.steps)
        self.steps.append(Step(sid, parent, kind, g.vertices, **kw))
        self._graphs[sid] = g
        return sid

    def graph(self, sid: int) -> Graph:
        return self._graphs[sid]

    def link_calls(self) -> list[tuple[LinkState, int]]:
        """Every (state, w) pair chosen by :func:`link_shedding_vertex`."""
        out = []
        for s in self.steps:
            if s.kind == "link-shed":
                out.append((LinkState(self._graphs[s.id], s.c, s.anchor, s.radius), s.vertex))
        return out


def decompose(t: Graph, r: int, trace: Trace | None = None) -> Certificate:
    """Certificate of vertex decomposability of Ind_r(t) for a forest t."""
    r = _check_radius(r)
    if not is_forest(t):
        raise ValueError("input must be a forest")
    return _decompose(t, r, trace, None)


def _decompose(t: Graph, r: int, tr: Trace | None, parent: int | None) -> Certificate:
    comps = connected_components(t)
    if not comps:
        if tr is not None:
            tr.add(parent, "empty", t)
        return SimplexLeaf(frozenset())
    if len(comps) > 1:
        sid = tr.add(parent, "forest", t) if tr is not None else None
        kids = tuple(_decompose(induced(t, comp), r, tr, sid) for comp in comps)
        return JoinNode(kids, tuple(comps))
    if t.vertex_count <= r:
        if tr is not None:
            tr.add(parent, "simplex", t)
        return SimplexLeaf(t.vertices)
    v = find_shedding_vertex(t, r)
    sid = tr.add(parent, "shed", t, vertex=v) if tr is not None else None
    del_branch = _decompose(delete(t, [v]), r, tr, sid)
    link_branch = _decompose_link(LinkState(t, frozenset([v]), v, r), tr, sid)
    return ShedNode(v, del_branch, link_branch)


def _decompose_link(state: LinkState, tr: Trace | None, parent: int | None) -> Certificate:
    t, c, r = state.tree, state.c, state.radius
    if len(c) == r:
        rest = delete(t, closed_neighborhood(t, c))
        sid = tr.add(parent, "link-full", t, c=c, anchor=state.anchor, radius=r) if tr is not None else None
        return _decompose(rest, r, tr, sid)
    w = link_shedding_vertex(state)
    sid = tr.add(parent, "link-shed", t, vertex=w, c=c, anchor=state.anchor, radius=r) if tr is not None else None

    # deletion of w: link of C inside Ind_r(T - w) = Ind_r(T') * Ind_r(rest)
    t_minus_w = delete(t, [w])
    comps = connected_components(t_minus_w)
    home = next(comp for comp in comps if state.anchor in comp)
    home_cert = _decompose(induced(t_minus_w, home), r, tr, sid)
    pieces = [certificate_link(home_cert, c)]
    parts = [certified_complex(pieces[0]).vertices]
    rest = t_minus_w.vertices - home
    if rest:
        pieces.append(_decompose(induced(t_minus_w, rest), r, tr, sid))
        parts.append(rest)
    keep = [(p, q) for p, q in zip(pieces, parts) if q]
    if len(keep) == 1:
        del_branch = keep[0][0]
    elif not keep:
        del_branch = SimplexLeaf(frozenset())
    else:
        del_branch = JoinNode(tuple(p for p, _ in keep), tuple(q for _, q in keep))

    link_branch = _decompose_link(LinkState(t, c | {w}, state.anchor, r), tr, sid)
    return ShedNode(w, del_branch, link_branch)


def survey_link_shedding(t: Graph, r: int, a) -> list[int]:
    """All shedding vertices of link(Ind_r(t), a), by brute force."""
    a = frozenset(a)
    if not is_r_independent(t, a, r):
        raise ValueError("a must be an r-independent set (a face of Ind_r)")
    return shedding_vertices(link(ind_complex(t, r), a))


def recursion_dot(trace: Trace, name: str = "recursion") -> str:
    """Graphviz description of a recorded recursion, one node per state."""
    lines = [f"digraph {name} {{", "  node [shape=box, fontname=monospace];"]
    for s in trace.steps:
        label = s.kind
        if s.vertex is not None:
            label += f" v={s.vertex}"
        if s.c is not None:
            label += " C={" + ",".join(map(str, sorted(s.c))) + "}"
        label += "\\nV={" + ",".join(map(str, sorted(s.vertices))) + "}"
        lines.append(f'  s{s.id} [label="{label}"];')
    for s in trace.steps:
        if s.parent is not None:
            lines.append(f"  s{s.parent} -> s{s.id};")
    lines.append("}")
    return "\n".join(lines) + "\n"
