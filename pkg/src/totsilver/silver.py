"""Totally silver colorings: verification, exact search, and audits.

A coloring is totally silver when every closed neighborhood ``N[v]`` holds each
color exactly once. For an ``r``-regular graph that is the same thing as a
proper ``(r+1)``-coloring of the square, so the solver below is a sudoku-style
search: every ``N[v]`` is a "box" that must be rainbow.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import (
    Bipartition,
    Graph,
    bipartition,
    bridges,
    components,
    degree_profile,
    square,
)

__all__ = [
    "Coloring",
    "MalformedColoring",
    "BudgetExceeded",
    "LimitExceeded",
    "SolveResult",
    "SilverReport",
    "DEFAULT_BUDGET",
    "first_violation",
    "verify_totally_silver",
    "solve_totally_silver",
    "solve_report",
    "k_coloring",
    "chromatic_number_square",
    "edge_chromatic_cubic",
    "three_edge_coloring",
    "partite_class_matrix",
    "check_necessary",
]

DEFAULT_BUDGET = 10**8


class MalformedColoring(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """The search visited more nodes than its budget allowed."""

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} nodes exceeded")
        self.budget = budget


class LimitExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        for v, c in enumerate(self.colors):
            if not 0 <= c < self.k:
                raise MalformedColoring(f"vertex {v} has color {c} outside 0..{self.k - 1}")

    @classmethod
    def of(cls, colors: Sequence[int], k: int | None = None) -> "Coloring":
        colors = tuple(int(c) for c in colors)
        if k is None:
            k = max(colors) + 1 if colors else 1
        return cls(colors, k)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    def restrict(self, vertices: Sequence[int]) -> "Coloring":
        return Coloring(tuple(self.colors[v] for v in vertices), self.k)


def first_violation(g: Graph, c: Coloring) -> int | None:
    """Least vertex whose closed neighborhood is not rainbow, else None."""
    if len(c) != g.n:
        raise MalformedColoring(f"coloring covers {len(c)} vertices, graph has {g.n}")
    full = (1 << c.k) - 1
    for v in range(g.n):
        nb = g.adj[v]
        if len(nb) + 1 != c.k:
            return v
        mask = 1 << c.colors[v]
        for w in nb:
            mask |= 1 << c.colors[w]
        if mask != full:
            return v
    return None


def verify_totally_silver(g: Graph, c: Coloring) -> bool:
    return first_violation(g, c) is None


# --- exact solver -------------------------------------------------------------


@dataclass(frozen=True)
class SolveResult:
    coloring: Coloring | None
    reason: str
    nodes: int


class _BoxSearch:
    """Backtracking search for a rainbow coloring of every closed neighborhood
    of one connected r-regular component (local vertex ids ``0..n-1``)."""

    def __init__(self, adj: list[list[int]], k: int, budget: int):
        self.n = len(adj)
        self.k = k
        self.full = (1 << k) - 1
        self.budget = budget
        self.nodes = 0
        self.boxes = [sorted([v, *adj[v]]) for v in range(self.n)]
        sq = [set() for _ in range(self.n)]
        for box in self.boxes:
            for a in box:
                sq[a].update(box)
        for v in range(self.n):
            sq[v].discard(v)
        self.sq = [sorted(s) for s in sq]
        # BFS rank from vertex 0 breaks ties in variable selection
        rank = [-1] * self.n
        rank[0] = 0
        order = [0]
        q = deque([0])
        while q:
            u = q.popleft()
            for w in sorted(adj[u]):
                if rank[w] < 0:
                    rank[w] = len(order)
                    order.append(w)
                    q.append(w)
        self.rank = rank

    def _propagate(self, color: list[int], cand: list[int], pending: list[tuple[int, int]]) -> bool:
        sq = self.sq
        full = self.full
        while True:
            while pending:
                v, c = pending.pop()
                if color[v] >= 0:
                    if color[v] != c:
                        return False
                    continue
                bit = 1 << c
                if not cand[v] & bit:
                    return False
                color[v] = c
                cand[v] = bit
                for u in sq[v]:
                    cu = cand[u]
                    if cu & bit:
                        if color[u] >= 0:
                            return False
                        cu &= ~bit
                        if not cu:
                            return False
                        cand[u] = cu
                        if not cu & (cu - 1):
                            pending.append((u, cu.bit_length() - 1))
            # a color that only one member of a box can still take is forced there
            for box in self.boxes:
                seen = twice = 0
                for u in box:
                    cu = cand[u]
                    twice |= seen & cu
                    seen |= cu
                if seen != full:
                    return False
                once = seen & ~twice
                if not once:
                    continue
                for u in box:
                    if color[u] < 0:
                        hit = cand[u] & once
                        if hit:
                            if hit & (hit - 1):
                                return False
                            pending.append((u, hit.bit_length() - 1))
            if not pending:
                return True

    def run(self) -> list[int] | None:
        color = [-1] * self.n
        cand = [self.full] * self.n
        # any solution can be recolored so that N[0] reads 0, 1, ..., r in order
        pending = [(v, i) for i, v in enumerate(self.boxes[0])]
        if not self._propagate(color, cand, pending):
            return None
        return self._search(color, cand)

    def _search(self, color: list[int], cand: list[int]) -> list[int] | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget)
        best = -1
        best_key = None
        for v in range(self.n):
            if color[v] < 0:
                key = (cand[v].bit_count(), self.rank[v])
                if best_key is None or key < best_key:
                    best, best_key = v, key
        if best < 0:
            return color
        cv = cand[best]
        while cv:
            bit = cv & -cv
            cv ^= bit
            c2 = list(color)
            k2 = list(cand)
            if self._propagate(c2, k2, [(best, bit.bit_length() - 1)]):
                found = self._search(c2, k2)
                if found is not None:
                    return found
        return None


def solve_report(g: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Decide whether ``g`` is totally silver, with a reason string.

    Components are solved independently; the node budget is shared. Raises
    :class:`BudgetExceeded` if the search is cut off.
    """
    regular, r = degree_profile(g)
    if not regular:
        return SolveResult(None, "not regular", 0)
    k = r + 1
    colors = [0] * g.n
    nodes = 0
    for comp in components(g):
        index = {v: i for i, v in enumerate(comp)}
        local = [[index[w] for w in g.adj[v]] for v in comp]
        search = _BoxSearch(local, k, budget - nodes)
        try:
            found = search.run()
        finally:
            nodes += search.nodes
        if found is None:
            return SolveResult(None, f"no coloring for component containing vertex {comp[0]}", nodes)
        for v, c in zip(comp, found):
            colors[v] = c
    col = Coloring(tuple(colors), k)
    assert verify_totally_silver(g, col)
    return SolveResult(col, "solved", nodes)


def solve_totally_silver(g: Graph, budget: int = DEFAULT_BUDGET) -> Coloring | None:
    """A verified totally silver coloring of ``g``, or None if none exists."""
    return solve_report(g, budget).coloring


# --- proper colorings of the square -------------------------------------------


def k_coloring(h: Graph, k: int, budget: int = DEFAULT_BUDGET) -> list[int] | None:
    """Exact DSATUR backtracking for a proper ``k``-coloring of ``h``."""
    n = h.n
    adj = h.adj_lists
    deg = [len(a) for a in adj]
    color = [-1] * n
    forbid = [0] * n
    nodes = 0

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] < 0:
                kv = (-forbid[v].bit_count(), -deg[v], v)
                if key is None or kv < key:
                    best, key = v, kv
        return best

    def rec(used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(budget)
        v = pick()
        if v < 0:
            return True
        # colors above the highest one in use are interchangeable
        for c in range(min(k, used + 1)):
            if forbid[v] >> c & 1:
                continue
            color[v] = c
            touched = []
            ok = True
            for w in adj[v]:
                if color[w] < 0 and not forbid[w] >> c & 1:
                    forbid[w] |= 1 << c
                    touched.append(w)
                    if forbid[w] == (1 << k) - 1:
                        ok = False
            if ok and rec(max(used, c + 1)):
                return True
            for w in touched:
                forbid[w] &= ~(1 << c)
            color[v] = -1
        return False

    if k <= 0:
        return [] if n == 0 else None
    return list(color) if rec(0) else None


def chromatic_number_square(g: Graph, upper_limit: int, budget: int = DEFAULT_BUDGET) -> int:
    """Least ``k <= upper_limit`` with ``square(g)`` properly ``k``-colorable.

    Starts from ``max degree + 1`` (a closed neighborhood is a clique in the
    square) and raises :class:`LimitExceeded` if no ``k`` up to the cap works.
    """
    if g.n == 0:
        return 0
    h = square(g)
    lower = max(len(a) for a in g.adj) + 1
    for k in range(lower, upper_limit + 1):
        if k_coloring(h, k, budget) is not None:
            return k
    raise LimitExceeded(f"square needs more than {upper_limit} colors")


# --- edge coloring of cubic graphs --------------------------------------------


def three_edge_coloring(g: Graph, budget: int = DEFAULT_BUDGET) -> dict[tuple[int, int], int] | None:
    """A proper 3-edge-coloring of a cubic graph, or None."""
    regular, r = degree_profile(g)
    if not regular or r != 3:
        raise ValueError("edge coloring search expects a cubic graph")
    edges = g.edge_list()
    used = [0] * g.n
    col: dict[tuple[int, int], int] = {}
    nodes = 0

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(budget)
        best, best_free = None, 4
        for e in edges:
            if e in col:
                continue
            free = 3 - (used[e[0]] | used[e[1]]).bit_count()
            if free < best_free:
                best, best_free = e, free
                if free <= 1:
                    break
        if best is None:
            return True
        if best_free == 0:
            return False
        u, v = best
        avail = 7 & ~(used[u] | used[v])
        while avail:
            bit = avail & -avail
            avail ^= bit
            col[best] = bit.bit_length() - 1
            used[u] |= bit
            used[v] |= bit
            if rec():
                return True
            used[u] &= ~bit
            used[v] &= ~bit
            del col[best]
        return False

    # the three edges at a vertex must get distinct colors; fix them at vertex 0
    if g.n:
        for i, w in enumerate(g.adj_lists[0]):
            e = (0, w)
            col[e] = i
            used[0] |= 1 << i
            used[w] |= 1 << i
    return dict(col) if rec() else None


def edge_chromatic_cubic(g: Graph) -> int:
    """3 if a cubic graph is 3-edge-colorable, else 4."""
    return 3 if three_edge_coloring(g) is not None else 4


# --- necessary conditions -----------------------------------------------------


def partite_class_matrix(g: Graph, c: Coloring, b: Bipartition) -> list[tuple[int, int]]:
    """Rows ``(|C_j & X|, |C_j & Y|)`` for each color ``j``."""
    if not b.is_valid_for(g):
        raise ValueError("bipartition does not fit the graph")
    if not verify_totally_silver(g, c):
        raise ValueError("coloring is not totally silver")
    rows = [[0, 0] for _ in range(c.k)]
    for v, col in enumerate(c.colors):
        rows[col][b.side[v]] += 1
    return [tuple(r) for r in rows]


@dataclass(frozen=True)
class SilverReport:
    """Audit of necessary conditions; ``None`` marks a check that does not apply."""

    is_regular: bool
    r: int | None
    order_divisible: bool | None
    classes_equal: bool | None
    bipartite_order_divisible: bool | None
    partite_class_constant: bool | None
    bridgeless: bool | None
    edge_colorable: bool | None

    @property
    def passes(self) -> bool:
        checks = (
            self.order_divisible,
            self.classes_equal,
            self.bipartite_order_divisible,
            self.partite_class_constant,
            self.bridgeless,
            self.edge_colorable,
        )
        return self.is_regular and all(x is not False for x in checks)


def check_necessary(g: Graph, coloring: Coloring | None = None) -> SilverReport:
    regular, r = degree_profile(g)
    if not regular:
        return SilverReport(False, None, None, None, None, None, None, None)
    n = g.n
    # the partite-class count needs r >= 2: K2 is bipartite, silver, and of order 2
    b = bipartition(g) if r >= 2 else None
    classes_equal = partite_constant = None
    if coloring is not None:
        sizes = {len(cls) for cls in coloring.classes()}
        classes_equal = len(sizes) <= 1 and coloring.k == r + 1
        if b is not None:
            rows = [[0, 0] for _ in range(coloring.k)]
            for v, col in enumerate(coloring.colors):
                rows[col][b.side[v]] += 1
            partite_constant = len({x for row in rows for x in row}) <= 1
    cubic = r == 3
    return SilverReport(
        is_regular=True,
        r=r,
        order_divisible=n % (r + 1) == 0,
        classes_equal=classes_equal,
        bipartite_order_divisible=(n % (2 * r + 2) == 0) if b is not None else None,
        partite_class_constant=partite_constant,
        bridgeless=(not bridges(g)) if cubic else None,
        edge_colorable=(edge_chromatic_cubic(g) == 3) if cubic else None,
    )
