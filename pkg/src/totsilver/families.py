"""Generators for the cubic (and r-regular) graph families studied here.

The usual 1-indexed names ``x_1..x_n`` map to internal vertex ``0..n-1``;
each generator documents its numbering so outputs are stable across runs.
Where a family carries a known totally silver coloring, the generator returns
it alongside the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Bipartition, Graph
from .silver import Coloring, verify_totally_silver

__all__ = [
    "ColoredGraph",
    "FamilySpec",
    "FAMILIES",
    "gen_clique_union",
    "gen_B",
    "gen_petersen",
    "gen_E",
    "gen_M",
    "gen_L",
    "gen_Lprime",
    "gen_moebius",
    "gen_D",
    "gen_cycle_star",
    "augment",
]


@dataclass(frozen=True)
class ColoredGraph:
    """A graph with an optional coloring and bipartition.

    ``origin`` records, for derived graphs, the label each vertex carried in the
    graph it was cut out of.
    """

    graph: Graph
    coloring: Coloring | None = None
    bipartition: Bipartition | None = None
    origin: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.coloring is not None and len(self.coloring) != self.graph.n:
            raise ValueError("coloring is not total on the graph")


def gen_clique_union(r: int, copies: int) -> ColoredGraph:
    """``copies`` disjoint ``K_{r+1}``; block ``b`` holds vertices ``b(r+1)..``."""
    if r < 0 or copies < 1:
        raise ValueError("need r >= 0 and copies >= 1")
    k = r + 1
    edges = [(b * k + i, b * k + j) for b in range(copies) for i in range(k) for j in range(i + 1, k)]
    g = Graph.from_edges(copies * k, edges)
    return ColoredGraph(g, Coloring(tuple(v % k for v in range(g.n)), k))


def gen_B(r: int) -> ColoredGraph:
    """``K_{r+1,r+1}`` minus a perfect matching: ``x_i -> i``, ``y_i -> r+1+i``,
    edges ``x_i y_j`` for ``i != j``, colored ``c(x_i) = c(y_i) = i``."""
    if r < 1:
        raise ValueError("B_r needs r >= 1")
    k = r + 1
    g = Graph.from_edges(2 * k, [(i, k + j) for i in range(k) for j in range(k) if i != j])
    col = Coloring(tuple(list(range(k)) * 2), k)
    return ColoredGraph(g, col, Bipartition(tuple([0] * k + [1] * k)))


def gen_petersen(n: int, d: int) -> Graph:
    """Generalized Petersen graph: outer ``x_i -> i-1``, inner ``y_i -> n+i-1``."""
    if d < 1 or n < 2 * d + 1:
        raise ValueError("P(n, d) needs d >= 1 and n >= 2d + 1")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + d) % n))
    return Graph.from_edges(2 * n, edges)


def gen_E(n: int) -> ColoredGraph:
    """Three ``n``-cycles on ``u, v, w`` plus hubs ``z_i`` joined to ``u_i, v_i, w_i``.

    Numbering: ``u_i -> i-1``, ``v_i -> n+i-1``, ``w_i -> 2n+i-1``,
    ``z_i -> 3n+i-1``. Colored (``u_i: i``, ``v_i: i+1``, ``w_i: i+2`` mod 3,
    hubs 3) only when ``3 | n``.
    """
    if n < 3:
        raise ValueError("E_n needs n >= 3")
    edges = []
    for ring in range(3):
        base = ring * n
        edges += [(base + i, base + (i + 1) % n) for i in range(n)]
    for i in range(n):
        edges += [(3 * n + i, ring * n + i) for ring in range(3)]
    g = Graph.from_edges(4 * n, edges)
    if n % 3:
        return ColoredGraph(g)
    cols = [0] * (4 * n)
    for i in range(1, n + 1):
        for ring in range(3):
            cols[ring * n + i - 1] = (i + ring) % 3
        cols[3 * n + i - 1] = 3
    return ColoredGraph(g, Coloring(tuple(cols), 4))


def gen_M(n: int) -> ColoredGraph:
    """A ``3n``-cycle ``u_i -> i-1`` with hubs ``z_i -> 3n+i-1`` on
    ``u_i, u_{n+i}, u_{2n+i}``; colored ``u_i: i mod 3``, hubs 3 when ``3 ∤ n``."""
    if n < 3:
        raise ValueError("M_n needs n >= 3")
    N = 3 * n
    edges = [(i, (i + 1) % N) for i in range(N)]
    for i in range(n):
        edges += [(N + i, i), (N + i, n + i), (N + i, 2 * n + i)]
    g = Graph.from_edges(4 * n, edges)
    if n % 3 == 0:
        return ColoredGraph(g)
    cols = [(i + 1) % 3 for i in range(N)] + [3] * n
    return ColoredGraph(g, Coloring(tuple(cols), 4))


def gen_L(half_n: int) -> Graph:
    """``L_{2n}``: a ``2n``-cycle ``x_i -> i-1`` plus chords ``x_i x_{i+5}`` for odd ``i``.

    In 0-indexed terms the chords are ``j -- j+5 (mod 2n)`` for even ``j``.
    """
    if half_n < 4:
        raise ValueError("L_{2n} needs n >= 4")
    N = 2 * half_n
    edges = [(j, (j + 1) % N) for j in range(N)]
    edges += [(j, (j + 5) % N) for j in range(0, N, 2)]
    return Graph.from_edges(N, edges)


def gen_Lprime(m: int) -> ColoredGraph:
    """A ``6m``-cycle ``y_i -> i-1`` plus one hub per ``i = 1, 2 (mod 6)`` joined
    to ``y_i, y_{i+4}, y_{i+8}``; hubs are numbered ``6m, 6m+1, ...`` in order of
    ``i``. Colored ``y_i: i mod 3``, hubs 3."""
    if m < 1:
        raise ValueError("L'_m needs m >= 1")
    N = 6 * m
    edges = [(i, (i + 1) % N) for i in range(N)]
    hub = N
    for i in range(1, N + 1):
        if i % 6 in (1, 2):
            for off in (0, 4, 8):
                edges.append((hub, (i - 1 + off) % N))
            hub += 1
    g = Graph.from_edges(8 * m, edges)
    cols = [(i + 1) % 3 for i in range(N)] + [3] * (2 * m)
    return ColoredGraph(g, Coloring(tuple(cols), 4))


def gen_moebius(n: int) -> Graph:
    """Möbius ladder ``V_{2n}``: cycle ``v_i -> i-1`` plus chords ``v_i v_{n+i}``."""
    if n < 2:
        raise ValueError("V_{2n} needs n >= 2")
    N = 2 * n
    edges = [(i, (i + 1) % N) for i in range(N)] + [(i, i + n) for i in range(n)]
    return Graph.from_edges(N, edges)


def gen_D(n: int) -> ColoredGraph:
    """Two subdivided Möbius ladders ``V_{2n}`` joined at their subdivision vertices.

    Each copy is a ``4n``-cycle (``x_i -> i-1`` and ``y_i -> 4n+i-1``) whose
    odd positions are the original ladder vertices, with chords
    ``x_i x_{i+2n}`` for odd ``i``; the even (subdivision) positions are matched
    across copies by ``x_i y_i``. Colored ``x_i: i mod 4``, ``y_i: i+2 mod 4``
    when ``n`` is odd.
    """
    if n < 2:
        raise ValueError("D_n needs n >= 2")
    N = 4 * n
    edges = []
    for base in (0, N):
        edges += [(base + j, base + (j + 1) % N) for j in range(N)]
        # 1-indexed odd i is 0-indexed even j
        edges += [(base + j, base + j + 2 * n) for j in range(0, 2 * n, 2)]
    # 1-indexed even i is 0-indexed odd j
    edges += [(j, N + j) for j in range(1, N, 2)]
    g = Graph.from_edges(2 * N, edges)
    if n % 2 == 0:
        return ColoredGraph(g)
    cols = [(j + 1) % 4 for j in range(N)] + [(j + 3) % 4 for j in range(N)]
    return ColoredGraph(g, Coloring(tuple(cols), 4))


def cycle_star_sets(n: int, a: int, b: int) -> list[tuple[int, int, int]]:
    N = 3 * n
    return [(3 * i % N, (3 * i + a) % N, (3 * i + b) % N) for i in range(n)]


def gen_cycle_star(n: int, a: int, b: int) -> ColoredGraph:
    """A ``3n``-cycle ``x_i -> i`` and hubs ``z_i -> 3n+i`` joined to
    ``x_{3i}, x_{3i+a}, x_{3i+b}`` (indices mod ``3n``).

    The hub neighborhoods must partition the cycle and each must meet all three
    residues mod 3; both conditions are checked directly. Colored
    ``x_i: i mod 3``, hubs 3.
    """
    if n < 1:
        raise ValueError("cycle-star needs n >= 1")
    if not 0 < a < b < 3 * n:
        raise ValueError("offsets must satisfy 0 < a < b < 3n")
    if {0, a % 3, b % 3} != {0, 1, 2}:
        raise ValueError(f"offsets {a}, {b} must cover residues 1 and 2 mod 3")
    N = 3 * n
    stars = cycle_star_sets(n, a, b)
    hit = [x for star in stars for x in star]
    if len(set(hit)) != N:
        raise ValueError(f"stars for offsets {a}, {b} do not partition the {N}-cycle")
    edges = [(i, (i + 1) % N) for i in range(N)]
    for i, star in enumerate(stars):
        edges += [(N + i, x) for x in star]
    g = Graph.from_edges(4 * n, edges)
    cols = [i % 3 for i in range(N)] + [3] * n
    return ColoredGraph(g, Coloring(tuple(cols), 4))


def augment(cg: ColoredGraph, matchings: Sequence[Sequence[int]] | None = None) -> ColoredGraph:
    """Add a new color class matched perfectly onto every existing class.

    ``matchings[i][j]`` is the vertex of class ``i`` joined to new vertex ``j``
    (numbered ``n + j``, colored ``r + 1``). The default pairs vertices in
    increasing order within each class.
    """
    g, c = cg.graph, cg.coloring
    if c is None or not verify_totally_silver(g, c):
        raise ValueError("augment needs a verified totally silver coloring")
    classes = c.classes()
    size = len(classes[0])
    if size == 0:
        raise ValueError("cannot augment an empty graph")
    if matchings is None:
        matchings = classes
    if len(matchings) != c.k:
        raise ValueError(f"expected {c.k} matchings, got {len(matchings)}")
    edges = list(g.edges)
    for i, match in enumerate(matchings):
        if sorted(match) != classes[i]:
            raise ValueError(f"matching {i} is not a bijection onto color class {i}")
        edges += [(g.n + j, v) for j, v in enumerate(match)]
    h = Graph.from_edges(g.n + size, edges)
    col = Coloring(c.colors + (c.k,) * size, c.k + 1)
    assert verify_totally_silver(h, col)
    return ColoredGraph(h, col)


# --- tagged family records ----------------------------------------------------

FAMILIES = ("cliques", "B", "petersen", "E", "M", "L", "Lprime", "moebius", "D", "cyclestar")


@dataclass(frozen=True)
class FamilySpec:
    """Names one family member, e.g. ``FamilySpec("petersen", n=8, d=3)``.

    For ``L`` the parameter ``n`` is half the order (``L_{2n}``); for
    ``moebius`` it is half the order of ``V_{2n}``.
    """

    family: str
    r: int | None = None
    copies: int | None = None
    n: int | None = None
    d: int | None = None
    m: int | None = None
    a: int | None = None
    b: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        need = {
            "cliques": ("r", "copies"),
            "B": ("r",),
            "petersen": ("n", "d"),
            "E": ("n",),
            "M": ("n",),
            "L": ("n",),
            "Lprime": ("m",),
            "moebius": ("n",),
            "D": ("n",),
            "cyclestar": ("n", "a", "b"),
        }[self.family]
        missing = [p for p in need if getattr(self, p) is None]
        if missing:
            raise ValueError(f"family {self.family} needs parameter(s): {', '.join(missing)}")

    @property
    def label(self) -> str:
        f = self.family
        if f == "cliques":
            return f"{self.copies}K{self.r + 1}"
        if f == "B":
            return f"B{self.r}"
        if f == "petersen":
            return f"P({self.n},{self.d})"
        if f == "L":
            return f"L{2 * self.n}"
        if f == "Lprime":
            return f"L'{self.m}"
        if f == "moebius":
            return f"V{2 * self.n}"
        if f == "cyclestar":
            return f"CS({self.n},{self.a},{self.b})"
        return f"{f}{self.n}"

    def build(self) -> ColoredGraph:
        f = self.family
        if f == "cliques":
            return gen_clique_union(self.r, self.copies)
        if f == "B":
            return gen_B(self.r)
        if f == "petersen":
            return ColoredGraph(gen_petersen(self.n, self.d))
        if f == "E":
            return gen_E(self.n)
        if f == "M":
            return gen_M(self.n)
        if f == "L":
            return ColoredGraph(gen_L(self.n))
        if f == "Lprime":
            return gen_Lprime(self.m)
        if f == "moebius":
            return ColoredGraph(gen_moebius(self.n))
        if f == "D":
            return gen_D(self.n)
        return gen_cycle_star(self.n, self.a, self.b)
