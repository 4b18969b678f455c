"""Undirected simple graphs on vertices ``0..n-1`` and the structural queries
used throughout the package (girth, connectivity, squares, covers, isomorphism).

Graphs are immutable values; every operation here is a pure function.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "Bipartition",
    "EdgeCut",
    "degree_profile",
    "girth",
    "components",
    "is_connected",
    "vertex_connectivity_at_least",
    "bridges",
    "edge_cuts_of_size",
    "bipartition",
    "square",
    "bipartite_double_cover",
    "is_isomorphic",
    "find_isomorphism",
    "disjoint_union",
    "induced_subgraph",
    "complement",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "complete_bipartite_graph",
    "hypercube_graph",
]

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph with vertex set ``range(n)``.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``. Use
    :meth:`from_edges` to build one from arbitrary pairs; it rejects loops and
    out-of-range endpoints and silently merges ``(u, v)`` with ``(v, u)``.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"invalid edge ({u}, {v}) for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        normed = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            normed.add(_norm(u, v))
        return cls(n, frozenset(normed))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_lists(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuples, for deterministic iteration."""
        return tuple(tuple(sorted(s)) for s in self.adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def with_edges(self, remove: Iterable[Edge] = (), add: Iterable[Edge] = ()) -> "Graph":
        """Return a copy with ``remove`` deleted and then ``add`` inserted."""
        es = set(self.edges)
        es.difference_update(_norm(u, v) for u, v in remove)
        es.update(_norm(u, v) for u, v in add)
        return Graph.from_edges(self.n, es)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Bipartition:
    """Two-sided labelling; ``side[v]`` is 0 for X and 1 for Y."""

    side: tuple[int, ...]

    @property
    def X(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == 0]

    @property
    def Y(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == 1]

    def is_valid_for(self, g: Graph) -> bool:
        return len(self.side) == g.n and all(self.side[u] != self.side[v] for u, v in g.edges)


@dataclass(frozen=True)
class EdgeCut:
    """A vertex subset S with the edges crossing it."""

    side_s: frozenset[int]
    cut_edges: tuple[Edge, ...]


def degree_profile(g: Graph) -> tuple[bool, int | None]:
    """Return ``(is_regular, r)``; ``r`` is None when degrees differ."""
    degs = {len(a) for a in g.adj}
    if len(degs) <= 1:
        return True, (degs.pop() if degs else 0)
    return False, None


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``math.inf`` for a forest.

    Runs a breadth-first search from every vertex; the first non-tree edge met
    from root ``s`` closes a cycle of length ``dist[u] + dist[w] + 1`` and the
    minimum over all roots is exact.
    """
    best = math.inf
    adj = g.adj_lists
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def components(g: Graph, removed: frozenset[int] | set[int] = frozenset()) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = [False] * g.n
    for v in removed:
        seen[v] = True
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff no set of fewer than ``k`` vertices disconnects ``g``.

    Exhaustive over all vertex subsets of size below ``k``; complete graphs
    have no vertex cut at all and always pass.
    """
    if k < 1 or k > 3:
        raise ValueError("k must be in 1..3")
    for size in range(k):
        for cut in combinations(range(g.n), size):
            if len(components(g, set(cut))) > 1:
                return False
    return True


def bridges(g: Graph, skip: Edge | None = None) -> list[Edge]:
    """All bridges (sorted), optionally ignoring edge ``skip``."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: list[Edge] = []
    timer = 0
    adj = g.adj_lists
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # iterative DFS: (vertex, parent, neighbor index)
        stack = [(root, -1, 0)]
        while stack:
            u, p, i = stack[-1]
            if i < len(adj[u]):
                stack[-1] = (u, p, i + 1)
                w = adj[u][i]
                if w == p or (skip is not None and _norm(u, w) == skip):
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, 0))
                else:
                    low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if p >= 0:
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        out.append(_norm(p, u))
    return sorted(out)


def _side_of_removal(g: Graph, removed: Sequence[Edge]) -> frozenset[int]:
    h = g.with_edges(remove=removed)
    return frozenset(components(h)[0])


def edge_cuts_of_size(g: Graph, s: int) -> list[EdgeCut]:
    """All minimal edge cuts with exactly ``s`` edges (``s`` in 1..2).

    For ``s == 2`` a pair ``{e, f}`` is a minimal cut iff neither edge is a
    bridge and ``f`` is a bridge of ``g - e``. ``side_s`` is the part
    containing vertex 0. Cuts are listed in lexicographic order of their
    sorted edge pairs.
    """
    if s not in (1, 2):
        raise ValueError("s must be 1 or 2")
    base = bridges(g)
    if s == 1:
        return [EdgeCut(_side_of_removal(g, [e]), (e,)) for e in base]
    base_set = set(base)
    found: set[tuple[Edge, Edge]] = set()
    for e in g.edge_list():
        if e in base_set:
            continue
        for f in bridges(g, skip=e):
            if f not in base_set:
                found.add((min(e, f), max(e, f)))
    return [EdgeCut(_side_of_removal(g, pair), pair) for pair in sorted(found)]


def bipartition(g: Graph) -> Bipartition | None:
    """Two-color by BFS (least vertex of each component on side X)."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.adj_lists[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    q.append(w)
                elif side[w] == side[u]:
                    return None
    return Bipartition(tuple(side))


def square(g: Graph) -> Graph:
    edges = set(g.edges)
    for v in range(g.n):
        for a, b in combinations(g.adj_lists[v], 2):
            edges.add((a, b))
    return Graph(g.n, frozenset(edges))


def bipartite_double_cover(g: Graph) -> Graph:
    """``g x K2``: vertex ``(u, i)`` for i in {1, 2} is numbered ``u + (i-1)*n``."""
    n = g.n
    edges = set()
    for u, v in g.edges:
        edges.add(_norm(u, v + n))
        edges.add(_norm(v, u + n))
    return Graph(2 * n, frozenset(edges))


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    edges = []
    off = 0
    for h in gs:
        edges.extend((u + off, v + off) for u, v in h.edges)
        off += h.n
    return Graph(off, frozenset(edges))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph relabelled order-preservingly; also returns the old labels."""
    keep = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph.from_edges(len(keep), edges), keep


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(e for e in combinations(range(g.n), 2) if e not in g.edges))


# --- small reference graphs -------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube_graph(d: int) -> Graph:
    n = 1 << d
    return Graph.from_edges(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])


# --- isomorphism --------------------------------------------------------------


def _distance_profile(g: Graph, s: int) -> tuple[int, ...]:
    dist = [-1] * g.n
    dist[s] = 0
    q = deque([s])
    counts = [1]
    while q:
        u = q.popleft()
        for w in g.adj_lists[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                if dist[w] == len(counts):
                    counts.append(0)
                counts[dist[w]] += 1
                q.append(w)
    return tuple(counts)


def _refine(g1: Graph, g2: Graph, c1: list[int], c2: list[int]) -> tuple[list[int], list[int]] | None:
    """Jointly refine two vertex colorings to a stable partition.

    Colors are renamed through a shared table so equal names mean equal
    signatures in both graphs. Returns None as soon as the color histograms
    differ, which rules out any isomorphism respecting the input colorings.
    """
    k = len(set(c1))
    while True:
        s1 = [(c1[v], tuple(sorted(c1[w] for w in g1.adj[v]))) for v in range(g1.n)]
        s2 = [(c2[v], tuple(sorted(c2[w] for w in g2.adj[v]))) for v in range(g2.n)]
        if sorted(s1) != sorted(s2):
            return None
        table = {sig: i for i, sig in enumerate(sorted(set(s1)))}
        c1 = [table[s] for s in s1]
        c2 = [table[s] for s in s2]
        if len(table) == k:
            return c1, c2
        k = len(table)


def find_isomorphism(g1: Graph, g2: Graph) -> dict[int, int] | None:
    """A bijection ``f`` with ``uv in E(g1) <=> f(u)f(v) in E(g2)``, or None.

    Individualization-refinement backtracking: vertices start colored by
    (degree, BFS distance-layer sizes); the partition is refined to a stable
    one, then a vertex in the smallest non-singleton cell of ``g1`` is matched
    against each same-colored vertex of ``g2`` in turn.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return None
    if sorted(len(a) for a in g1.adj) != sorted(len(a) for a in g2.adj):
        return None
    p1 = [_distance_profile(g1, v) for v in range(g1.n)]
    p2 = [_distance_profile(g2, v) for v in range(g2.n)]
    if sorted(p1) != sorted(p2):
        return None
    table = {p: i for i, p in enumerate(sorted(set(p1)))}
    start = _refine(g1, g2, [table[p] for p in p1], [table[p] for p in p2])
    if start is None:
        return None

    def search(c1: list[int], c2: list[int]) -> dict[int, int] | None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(c1):
            cells.setdefault(c, []).append(v)
        nonsingle = [cell for cell in cells.values() if len(cell) > 1]
        if not nonsingle:
            where = {c: v for v, c in enumerate(c2)}
            f = {v: where[c1[v]] for v in range(g1.n)}
            if all(g2.has_edge(f[u], f[v]) for u, v in g1.edges):
                return f
            return None
        cell = min(nonsingle, key=lambda x: (len(x), x[0]))
        v = cell[0]
        col = c1[v]
        fresh = max(c1) + 1
        for w in range(g2.n):
            if c2[w] != col:
                continue
            d1 = list(c1)
            d2 = list(c2)
            d1[v] = fresh
            d2[w] = fresh
            refined = _refine(g1, g2, d1, d2)
            if refined is None:
                continue
            f = search(*refined)
            if f is not None:
                return f
        return None

    return search(*start)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None
