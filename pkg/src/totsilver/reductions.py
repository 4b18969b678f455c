"""Reductions of cubic totally silver graphs to smaller ones.

Three local moves shrink a cubic totally silver graph while keeping the
restricted coloring totally silver: splitting along a 2-edge cut, removing a
triangle plus one vertex, and removing a 4-cycle. A graph none of them apply to
is 3-connected with girth at least 6 ("nontrivial"), or is K4.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .families import ColoredGraph
from .graph import (
    Graph,
    components,
    degree_profile,
    edge_cuts_of_size,
    girth,
    induced_subgraph,
    is_connected,
    vertex_connectivity_at_least,
)
from .silver import Coloring, verify_totally_silver

__all__ = [
    "ReductionStep",
    "ReductionError",
    "split_two_edge_cut",
    "reduce_triangle",
    "reduce_four_cycle",
    "is_nontrivial",
    "reduce_fully",
    "find_triangle",
    "find_four_cycle",
]


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class ReductionStep:
    kind: str  # TwoEdgeCutSplit, TriangleCaseA, TriangleCaseB, FourCycle
    removed: tuple[int, ...] = ()
    added_edges: tuple[tuple[int, int], ...] = ()
    removed_edges: tuple[tuple[int, int], ...] = ()
    order_before: int = field(default=0, compare=False)

    def relabel(self, origin: tuple[int, ...]) -> "ReductionStep":
        def e(pair):
            return tuple(sorted((origin[pair[0]], origin[pair[1]])))

        return ReductionStep(
            self.kind,
            tuple(origin[v] for v in self.removed),
            tuple(e(p) for p in self.added_edges),
            tuple(e(p) for p in self.removed_edges),
            self.order_before,
        )


def _require_cubic_silver(g: Graph, c: Coloring) -> None:
    regular, r = degree_profile(g)
    if not regular or r != 3:
        raise ReductionError("graph is not cubic")
    if not verify_totally_silver(g, c):
        raise ReductionError("coloring is not totally silver")


def _restrict(g: Graph, c: Coloring, keep) -> ColoredGraph:
    h, origin = induced_subgraph(g, keep)
    col = c.restrict(origin)
    if not verify_totally_silver(h, col):
        raise AssertionError("restricted coloring is not totally silver")
    return ColoredGraph(h, col, origin=origin)


def split_two_edge_cut(g: Graph, c: Coloring) -> tuple[ColoredGraph, ColoredGraph, ReductionStep]:
    """Split a connected cubic totally silver graph along its first 2-edge cut.

    With cut edges ``xy`` and ``x'y'`` (``x, x'`` on the side holding vertex
    0) the colors satisfy ``c(x) = c(y')`` and ``c(y) = c(x')``, so swapping
    them for ``xx'`` and ``yy'`` is a colored 2-switch that disconnects the
    two sides.
    """
    _require_cubic_silver(g, c)
    if not is_connected(g):
        raise ReductionError("graph is not connected")
    cuts = edge_cuts_of_size(g, 2)
    if not cuts:
        raise ReductionError("no 2-edge cut")
    cut = cuts[0]
    S = cut.side_s
    (a1, b1), (a2, b2) = cut.cut_edges
    x, y = (a1, b1) if a1 in S else (b1, a1)
    xp, yp = (a2, b2) if a2 in S else (b2, a2)
    assert x != xp and y != yp, "a bridgeless cubic graph has disjoint cut edges"
    assert c[x] == c[yp] and c[y] == c[xp]
    assert not g.has_edge(x, xp) and not g.has_edge(y, yp)
    h = g.with_edges(remove=[(x, y), (xp, yp)], add=[(x, xp), (y, yp)])
    step = ReductionStep(
        "TwoEdgeCutSplit",
        (),
        (tuple(sorted((x, xp))), tuple(sorted((y, yp)))),
        (tuple(sorted((x, y))), tuple(sorted((xp, yp)))),
        g.n,
    )
    T = [v for v in range(g.n) if v not in S]
    return _restrict(h, c, sorted(S)), _restrict(h, c, T), step


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    for a in range(g.n):
        for b in g.adj_lists[a]:
            if b <= a:
                continue
            for d in g.adj_lists[b]:
                if d > b and g.has_edge(a, d):
                    return (a, b, d)
    return None


def reduce_triangle(g: Graph, c: Coloring) -> tuple[ColoredGraph, ReductionStep]:
    """Remove a triangle and one more vertex, reconnecting the survivors.

    Case A (some outside vertex ``y`` sees two triangle vertices): drop the
    triangle and ``y`` and join the two vertices left with degree 2. Case B:
    each triangle vertex ``x_i`` has its own outside neighbor ``y_i``; drop the
    triangle and ``y_3``, then join ``y_1, y_2`` to the other neighbors of
    ``y_3`` so that colors match.
    """
    _require_cubic_silver(g, c)
    if g.n <= 4:
        raise ReductionError("K4 cannot be reduced further")
    tri = find_triangle(g)
    if tri is None:
        raise ReductionError("no triangle")
    T = set(tri)
    outside = {}
    for x in tri:
        (o,) = g.adj[x] - T
        outside[x] = o
    counts: dict[int, list[int]] = {}
    for x, o in outside.items():
        counts.setdefault(o, []).append(x)
    shared = sorted(o for o, xs in counts.items() if len(xs) >= 2)
    if shared:
        y = shared[0]
        if len(counts[y]) == 3:
            raise ReductionError("triangle plus common neighbor is a K4 component")
        (lone,) = [x for x in tri if outside[x] != y]
        p = outside[lone]
        (q,) = g.adj[y] - T
        assert p != q, "distinct survivors, else a 5-cycle"
        assert not g.has_edge(p, q)
        removed = tuple(sorted(T | {y}))
        h = g.with_edges(add=[(p, q)])
        keep = [v for v in range(g.n) if v not in removed]
        out = _restrict(h, c, keep)
        step = ReductionStep(
            "TriangleCaseA",
            removed,
            ((min(p, q), max(p, q)),),
            tuple(sorted(e for e in g.edges if e[0] in removed or e[1] in removed)),
            g.n,
        )
        return out, step
    x1, x2, x3 = tri
    y1, y2, y3 = outside[x1], outside[x2], outside[x3]
    assert c[y1] == c[y2] == c[y3]
    z1, z2 = sorted(g.adj[y3] - {x3})
    if c[z1] != c[x1]:
        z1, z2 = z2, z1
    assert c[z1] == c[x1] and c[z2] == c[x2]
    assert not g.has_edge(y1, z1) and not g.has_edge(y2, z2)
    removed = tuple(sorted((x1, x2, x3, y3)))
    h = g.with_edges(add=[(y1, z1), (y2, z2)])
    keep = [v for v in range(g.n) if v not in removed]
    out = _restrict(h, c, keep)
    step = ReductionStep(
        "TriangleCaseB",
        removed,
        (tuple(sorted((y1, z1))), tuple(sorted((y2, z2)))),
        tuple(sorted(e for e in g.edges if e[0] in removed or e[1] in removed)),
        g.n,
    )
    return out, step


def find_four_cycle(g: Graph) -> tuple[int, int, int, int] | None:
    """Lexicographically least 4-cycle ``(a, b, d, e)`` with ``a`` minimal and ``b < e``."""
    best = None
    for a in range(g.n):
        for b, e in combinations(g.adj_lists[a], 2):
            if b < a or e < a:
                continue
            for d in sorted((g.adj[b] & g.adj[e]) - {a}):
                if d > a:
                    cyc = (a, b, d, e)
                    if best is None or cyc < best:
                        best = cyc
        if best is not None:
            return best
    return None


def reduce_four_cycle(g: Graph, c: Coloring) -> tuple[ColoredGraph, ReductionStep]:
    """Remove a 4-cycle ``x1x2x3x4`` and join opposite outside neighbors
    ``y1y3`` and ``y2y4``."""
    _require_cubic_silver(g, c)
    if g.n <= 4:
        raise ReductionError("graph too small to reduce")
    if find_triangle(g) is not None:
        raise ReductionError("graph has a triangle")
    cyc = find_four_cycle(g)
    if cyc is None:
        raise ReductionError("no 4-cycle")
    C = set(cyc)
    ys = []
    for i, x in enumerate(cyc):
        rest = g.adj[x] - {cyc[i - 1], cyc[(i + 1) % 4]}
        (y,) = rest
        assert y not in C
        ys.append(y)
    y1, y2, y3, y4 = ys
    assert len(set(ys)) == 4
    # y_i carries the color of the opposite cycle vertex
    assert c[y1] == c[cyc[2]] and c[y2] == c[cyc[3]] and c[y3] == c[cyc[0]] and c[y4] == c[cyc[1]]
    assert not g.has_edge(y1, y3) and not g.has_edge(y2, y4)
    h = g.with_edges(add=[(y1, y3), (y2, y4)])
    removed = tuple(sorted(C))
    keep = [v for v in range(g.n) if v not in C]
    out = _restrict(h, c, keep)
    step = ReductionStep(
        "FourCycle",
        removed,
        (tuple(sorted((y1, y3))), tuple(sorted((y2, y4)))),
        tuple(sorted(e for e in g.edges if e[0] in C or e[1] in C)),
        g.n,
    )
    return out, step


def is_nontrivial(g: Graph) -> bool:
    regular, r = degree_profile(g)
    if not regular or r != 3:
        raise ValueError("nontriviality is defined for cubic graphs")
    return girth(g) >= 6 and vertex_connectivity_at_least(g, 3)


def reduce_fully(g: Graph, c: Coloring) -> tuple[list[ColoredGraph], list[ReductionStep]]:
    """Apply the reductions until every component is K4 or nontrivial.

    Priority: 2-edge cut, then triangle, then 4-cycle; components are handled
    first-in first-out. Terminal graphs carry ``origin`` labels and steps are
    reported in the labels of ``g``.
    """
    _require_cubic_silver(g, c)
    queue = []
    for comp in components(g):
        queue.append(_restrict(g, c, comp))
    done: list[ColoredGraph] = []
    steps: list[ReductionStep] = []
    while queue:
        cg = queue.pop(0)
        h, col, origin = cg.graph, cg.coloring, cg.origin
        if h.n == 4:
            done.append(cg)
            continue
        if edge_cuts_of_size(h, 2):
            s, t, step = split_two_edge_cut(h, col)
            steps.append(step.relabel(origin))
            outs = [s, t]
        elif find_triangle(h) is not None:
            out, step = reduce_triangle(h, col)
            steps.append(step.relabel(origin))
            outs = [out]
        elif find_four_cycle(h) is not None:
            out, step = reduce_four_cycle(h, col)
            steps.append(step.relabel(origin))
            outs = [out]
        elif is_nontrivial(h):
            done.append(cg)
            continue
        else:
            raise ReductionError("irreducible component that is not nontrivial")
        for out in outs:
            full_origin = tuple(origin[v] for v in out.origin)
            for comp in components(out.graph):
                sub = _restrict(out.graph, out.coloring, comp)
                queue.append(ColoredGraph(sub.graph, sub.coloring, origin=tuple(full_origin[v] for v in sub.origin)))
    return done, steps
