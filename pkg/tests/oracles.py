"""Independent brute-force oracles for the test suite.

Nothing here imports the search code under test; each oracle takes the most
direct route to its answer, trading speed for obviousness.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx
import numpy as np

from totsilver.graph import Graph, complement


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def brute_girth(g: Graph) -> float:
    """Shortest cycle by exhaustive simple-path extension from each start vertex."""
    adj = [sorted(g.adj[v]) for v in range(g.n)]
    best = math.inf

    def extend(start, path, on_path):
        nonlocal best
        u = path[-1]
        for w in adj[u]:
            if w == start and len(path) >= 3:
                best = min(best, len(path))
            elif w > start and w not in on_path and len(path) + 1 < best:
                on_path.add(w)
                path.append(w)
                extend(start, path, on_path)
                path.pop()
                on_path.discard(w)

    for s in range(g.n):
        extend(s, [s], {s})
    return best


def brute_distances(g: Graph) -> list[list[float]]:
    """Floyd-Warshall all-pairs distances."""
    n = g.n
    d = [[0 if i == j else (1 if g.has_edge(i, j) else math.inf) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Try every permutation (n <= 8)."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    e2 = g2.edges
    for p in permutations(range(g1.n)):
        if all(tuple(sorted((p[u], p[v]))) in e2 for u, v in g1.edges):
            return True
    return False


def brute_vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    h = to_nx(g)
    if g.n <= 1:
        return True
    if nx.is_connected(h) and g.m == g.n * (g.n - 1) // 2:
        return True  # complete graphs have no vertex cut
    return nx.node_connectivity(h) >= k


def brute_silver_exists(g: Graph) -> bool:
    """Enumerate colorings vertex by vertex in natural order, keeping every
    partial assignment with no repeated color inside any closed neighborhood.

    Equivalent to checking all ``(r+1)^n`` colorings: a partial coloring with a
    repeat can never complete to a rainbow one. Vertex 0 is fixed to color 0
    (colors are interchangeable). Vectorized with numpy.
    """
    degs = {len(a) for a in g.adj}
    if len(degs) > 1:
        return False
    if g.n == 0:
        return True
    k = degs.pop() + 1
    boxes = [sorted(g.adj[v] | {v}) for v in range(g.n)]
    # pairs of vertices sharing a box must differ; check each pair once its later end is set
    earlier: list[set[int]] = [set() for _ in range(g.n)]
    for box in boxes:
        for a, b in combinations(box, 2):
            earlier[max(a, b)].add(min(a, b))
    states = np.zeros((1, 1), dtype=np.int8)
    for v in range(1, g.n):
        m = states.shape[0]
        ext = np.repeat(states, k, axis=0)
        newcol = np.tile(np.arange(k, dtype=np.int8), m)
        ok = np.ones(ext.shape[0], dtype=bool)
        for u in earlier[v]:
            ok &= ext[:, u] != newcol
        states = np.concatenate([ext[ok], newcol[ok, None]], axis=1)
        if states.shape[0] == 0:
            return False
    full = (1 << k) - 1
    masks = np.left_shift(1, states.astype(np.int64))
    good = np.ones(states.shape[0], dtype=bool)
    for box in boxes:
        acc = np.zeros(states.shape[0], dtype=np.int64)
        for u in box:
            acc |= masks[:, u]
        good &= (acc == full) & (len(box) == k)
    return bool(good.any())


def silver_colorings_product(g: Graph, k: int):
    """Literal enumeration of all k^n colorings (tiny graphs only)."""
    from itertools import product

    boxes = [g.adj[v] | {v} for v in range(g.n)]
    for cols in product(range(k), repeat=g.n):
        if all(sorted(cols[u] for u in box) == list(range(k)) for box in boxes):
            yield cols


# --- enumeration of regular graphs ---------------------------------------------


def _labelled_regular(n: int, r: int):
    """r-regular graphs on n labelled vertices, up to swapping vertices that are
    indistinguishable so far (same neighbor set, both unprocessed)."""
    adj = [set() for _ in range(n)]

    def fill(v):
        if v == n:
            yield frozenset((a, b) for a in range(n) for b in adj[a] if a < b)
            return
        need = r - len(adj[v])
        if need < 0:
            return
        if need == 0:
            yield from fill(v + 1)
            return
        cands = [w for w in range(v + 1, n) if len(adj[w]) < r]
        groups: dict[frozenset, list[int]] = {}
        for w in cands:
            groups.setdefault(frozenset(adj[w]), []).append(w)
        glist = list(groups.values())

        def choose(gi, left, picked):
            if left == 0:
                for w in picked:
                    adj[v].add(w)
                    adj[w].add(v)
                yield from fill(v + 1)
                for w in picked:
                    adj[v].discard(w)
                    adj[w].discard(v)
                return
            if gi == len(glist):
                return
            grp = glist[gi]
            for t in range(min(left, len(grp)), -1, -1):
                yield from choose(gi + 1, left - t, picked + grp[:t])

        yield from choose(0, need, [])

    yield from fill(0)


@lru_cache(maxsize=None)
def regular_graphs(n: int, r: int) -> tuple[Graph, ...]:
    """All r-regular graphs on n vertices up to isomorphism."""
    if n * r % 2 or r >= n and n > 0:
        return ()
    if 2 * r > n - 1 and n > 0:
        return tuple(complement(g) for g in regular_graphs(n, n - 1 - r))
    buckets: dict[str, list[Graph]] = {}
    out = []
    for edges in _labelled_regular(n, r):
        g = Graph(n, edges)
        key = nx.weisfeiler_lehman_graph_hash(to_nx(g), iterations=4)
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(to_nx(g), to_nx(h)) for h in bucket):
            continue
        bucket.append(g)
        out.append(g)
    return tuple(out)
