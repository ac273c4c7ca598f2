"""Simple undirected graphs, rooted trees and labeled-tree enumeration.

Vertices are nonnegative integers and are never relabeled: ``induced`` and
``delete`` keep the original labels so that everything computed downstream
(complexes, certificates) speaks the same vertex names as the input.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

import numpy as np

from ._bits import from_mask, iter_bits, to_mask

VertexSet = frozenset


class GraphFormatError(ValueError):
    """Raised when a graph text document cannot be parsed."""


class Graph:
    """An immutable simple undirected graph on integer labels."""

    __slots__ = ("_vertices", "_adj", "_nbr")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        verts = frozenset(int(v) for v in vertices)
        nbr = {v: 0 for v in verts}
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u not in nbr or v not in nbr:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        self._vertices = verts
        self._nbr = nbr
        self._adj = {v: tuple(iter_bits(m)) for v, m in nbr.items()}

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(range(n), edges)

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def adjacency(self) -> Mapping[int, tuple[int, ...]]:
        return self._adj

    @property
    def vertex_mask(self) -> int:
        return to_mask(self._vertices)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        return self._nbr[v]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in self._adj for v in self._adj[u] if u < v)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj.values()) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._nbr == other._nbr

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self.edges)))

    def __repr__(self) -> str:
        return f"Graph(vertices={sorted(self._vertices)}, edges={self.edges})"


def _check_subset(g: Graph, a: Iterable[int]) -> frozenset[int]:
    a = frozenset(a)
    extra = a - g.vertices
    if extra:
        raise ValueError(f"vertices {sorted(extra)} are not in the graph")
    return a


def _components_of_mask(g: Graph, mask: int) -> list[int]:
    """Connected components of g[mask], each as a bit mask, ordered by smallest member."""
    comps = []
    remaining = mask
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.neighbor_mask(v)
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def connected_components(g: Graph) -> list[frozenset[int]]:
    return [from_mask(c) for c in _components_of_mask(g, g.vertex_mask)]


def induced(g: Graph, a: Iterable[int]) -> Graph:
    """The induced subgraph g[a], labels preserved."""
    a = _check_subset(g, a)
    return Graph(a, ((u, v) for u, v in g.edges if u in a and v in a))


def closed_neighborhood(g: Graph, a: Iterable[int]) -> frozenset[int]:
    a = _check_subset(g, a)
    out = set(a)
    for u in a:
        out.update(g.neighbors(u))
    return frozenset(out)


def delete(g: Graph, a: Iterable[int]) -> Graph:
    a = _check_subset(g, a)
    return induced(g, g.vertices - a)


def is_connected(g: Graph, a: Iterable[int] | None = None) -> bool:
    """True iff g (or g[a]) is connected; the empty vertex set counts as disconnected."""
    mask = g.vertex_mask if a is None else to_mask(_check_subset(g, a))
    return mask != 0 and len(_components_of_mask(g, mask)) == 1


def is_tree(g: Graph) -> bool:
    return g.vertex_count > 0 and g.edge_count == g.vertex_count - 1 and is_connected(g)


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.vertex_count - len(_components_of_mask(g, g.vertex_mask))


@dataclass(frozen=True)
class RootedTree:
    tree: Graph
    root: int
    parent: Mapping[int, int | None]
    children: Mapping[int, tuple[int, ...]]
    subtree_size: Mapping[int, int]

    def __post_init__(self):
        if self.parent[self.root] is not None:
            raise AssertionError("root has a parent")
        for u, ch in self.children.items():
            if self.subtree_size[u] != 1 + sum(self.subtree_size[c] for c in ch):
                raise AssertionError(f"subtree size mismatch at {u}")
            for c in ch:
                if self.parent[c] != u:
                    raise AssertionError(f"parent/children disagree at {c}")
        if self.subtree_size[self.root] != self.tree.vertex_count:
            raise AssertionError("root subtree does not span the tree")

    def subtree_vertices(self, u: int) -> frozenset[int]:
        """V(T_u): u together with all of its descendants."""
        out = [u]
        stack = [u]
        while stack:
            x = stack.pop()
            out.extend(self.children[x])
            stack.extend(self.children[x])
        return frozenset(out)

    def depth(self) -> int:
        best = 0
        stack = [(self.root, 0)]
        while stack:
            x, d = stack.pop()
            best = max(best, d)
            stack.extend((c, d + 1) for c in self.children[x])
        return best


def root_at(t: Graph, v: int) -> RootedTree:
    if not is_tree(t):
        raise ValueError("root_at requires a tree")
    if v not in t.vertices:
        raise ValueError(f"root {v} is not a vertex of the tree")
    parent: dict[int, int | None] = {v: None}
    order = [v]
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in t.neighbors(x):
            if y not in parent:
                parent[y] = x
                order.append(y)
                queue.append(y)
    children: dict[int, list[int]] = {x: [] for x in order}
    for x in order[1:]:
        children[parent[x]].append(x)
    size = {}
    for x in reversed(order):
        size[x] = 1 + sum(size[c] for c in children[x])
    return RootedTree(
        tree=t,
        root=v,
        parent=parent,
        children={x: tuple(sorted(ch)) for x, ch in children.items()},
        subtree_size=size,
    )


# -- labeled trees ------------------------------------------------------------

def prufer_decode(seq: Iterable[int], n: int) -> Graph:
    seq = list(seq)
    if n == 1:
        return Graph([0])
    if len(seq) != n - 2:
        raise ValueError("Pruefer sequence must have length n - 2")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def prufer_encode(t: Graph) -> tuple[int, ...]:
    """Inverse of :func:`prufer_decode` for trees on labels 0..n-1."""
    n = t.vertex_count
    if t.vertices != frozenset(range(n)) or not is_tree(t):
        raise ValueError("prufer_encode needs a tree on labels 0..n-1")
    if n <= 2:
        return ()
    degree = {v: len(t.neighbors(v)) for v in range(n)}
    removed = set()
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        removed.add(leaf)
        (nb,) = [y for y in t.neighbors(leaf) if y not in removed]
        seq.append(nb)
        degree[nb] -= 1
        if degree[nb] == 1:
            heapq.heappush(leaves, nb)
    return tuple(seq)


def _ahu(rt: RootedTree, u: int) -> str:
    return "(" + "".join(sorted(_ahu(rt, c) for c in rt.children[u])) + ")"


def tree_centers(t: Graph) -> list[int]:
    degree = {v: len(t.neighbors(v)) for v in t.vertices}
    layer = [v for v, d in degree.items() if d <= 1]
    remaining = t.vertex_count
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for y in t.neighbors(leaf):
                degree[y] -= 1
                if degree[y] == 1:
                    nxt.append(y)
        layer = nxt
    return sorted(layer)


def canonical_tree_code(t: Graph) -> str:
    """AHU encoding of an unrooted tree: isomorphic trees get equal codes."""
    return min(_ahu(root_at(t, c), c) for c in tree_centers(t))


def enumerate_labeled_trees(n: int, unique: bool = False) -> Iterator[Graph]:
    """All labeled trees on 0..n-1 in Pruefer-sequence order.

    With ``unique=True`` only the first representative of each isomorphism
    class is yielded.
    """
    if n < 1:
        raise ValueError("n must be positive")
    seen = set()
    if n <= 2:
        seqs = [()]
    else:
        seqs = itertools.product(range(n), repeat=n - 2)
    for seq in seqs:
        t = prufer_decode(seq, n)
        if unique:
            code = canonical_tree_code(t)
            if code in seen:
                continue
            seen.add(code)
        yield t


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on 0..n-1 (random Pruefer sequence)."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    seq = rng.integers(0, n, size=max(n - 2, 0)).tolist() if n > 2 else []
    return prufer_decode(seq, n)


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    if g1.vertices & g2.vertices:
        raise ValueError("graphs share vertices")
    return Graph(g1.vertices | g2.vertices, g1.edges + g2.edges)


def relabel(g: Graph, offset: int) -> Graph:
    return Graph((v + offset for v in g.vertices), ((u + offset, v + offset) for u, v in g.edges))


# -- text format --------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-indexed, ``#`` comments)."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(x) for x in s.split()]))
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected integers, got {s!r}") from None
    if not rows:
        raise GraphFormatError("missing header line 'n m'")
    lineno, header = rows[0]
    if len(header) != 2 or header[0] < 0 or header[1] < 0:
        raise GraphFormatError(f"line {lineno}: header must be 'n m'")
    n, m = header
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(rows) - 1}")
    seen = set()
    for lineno, row in rows[1:]:
        if len(row) != 2:
            raise GraphFormatError(f"line {lineno}: edge must be 'u v'")
        u, v = row
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: label out of range 0..{n - 1}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
    return Graph.from_edges(n, seen)


def format_graph(g: Graph, comment: str | None = None) -> str:
    n = g.vertex_count
    if g.vertices != frozenset(range(n)):
        raise ValueError("graph text format needs labels 0..n-1")
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"{n} {g.edge_count}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())
