"""Colored 2-switches and switch certificates.

A move ``(u1, v1, u2, v2)`` deletes ``u1v1, u2v2`` and inserts ``u1v2, u2v1``;
it is *colored* when ``c(u1) == c(u2)`` and ``c(v1) == c(v2)``, which leaves the
color multiset of every closed neighborhood unchanged.

The decompositions below walk a totally silver graph down to a disjoint union
of cliques (or of ``B_r`` blocks, in the bipartite setting) and record the
moves; reading them backwards rebuilds the graph from that base.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graph import Bipartition, Graph, bipartition, components, degree_profile, induced_subgraph
from .silver import Coloring, verify_totally_silver

__all__ = [
    "SwitchMove",
    "SwitchCertificate",
    "InvalidSwitch",
    "CoincidentVertices",
    "MissingEdge",
    "ExistingEdge",
    "ColorMismatch",
    "SideViolation",
    "ReplayError",
    "apply_switch",
    "apply_bipartite_switch",
    "decompose_to_cliques",
    "decompose_to_Br",
    "replay",
    "is_clique_block",
    "is_Br_block",
]


class SwitchMove(NamedTuple):
    u1: int
    v1: int
    u2: int
    v2: int

    def inverse(self) -> "SwitchMove":
        return SwitchMove(self.u1, self.v2, self.u2, self.v1)


class InvalidSwitch(ValueError):
    pass


class CoincidentVertices(InvalidSwitch):
    pass


class MissingEdge(InvalidSwitch):
    pass


class ExistingEdge(InvalidSwitch):
    pass


class ColorMismatch(InvalidSwitch):
    pass


class SideViolation(InvalidSwitch):
    pass


class ReplayError(ValueError):
    def __init__(self, step: int, cause: InvalidSwitch):
        super().__init__(f"move {step} is invalid: {cause}")
        self.step = step
        self.cause = cause


def _check_move(g: Graph, c: Coloring, m: SwitchMove) -> None:
    u1, v1, u2, v2 = m
    if len({u1, v1, u2, v2}) != 4:
        raise CoincidentVertices(f"{m} repeats a vertex")
    for a, b in ((u1, v1), (u2, v2)):
        if not g.has_edge(a, b):
            raise MissingEdge(f"{a}{b} is not an edge")
    for a, b in ((u1, v2), (u2, v1)):
        if g.has_edge(a, b):
            raise ExistingEdge(f"{a}{b} is already an edge")
    if c[u1] != c[u2] or c[v1] != c[v2]:
        raise ColorMismatch(f"{m} colors ({c[u1]},{c[v1]}) vs ({c[u2]},{c[v2]})")


def apply_switch(g: Graph, c: Coloring, m: SwitchMove) -> Graph:
    m = SwitchMove(*m)
    _check_move(g, c, m)
    return g.with_edges(remove=[(m.u1, m.v1), (m.u2, m.v2)], add=[(m.u1, m.v2), (m.u2, m.v1)])


def apply_bipartite_switch(g: Graph, c: Coloring, b: Bipartition, m: SwitchMove) -> Graph:
    m = SwitchMove(*m)
    _check_move(g, c, m)
    if b.side[m.u1] != b.side[m.u2]:
        raise SideViolation(f"{m.u1} and {m.u2} lie on different sides")
    return apply_switch(g, c, m)


@dataclass(frozen=True)
class SwitchCertificate:
    """Evidence that ``target`` arises from ``start_graph`` by colored switches.

    ``moves`` are stored in the graph-to-base direction, as the decomposition
    found them; :meth:`replay_moves` gives the base-to-graph sequence.
    ``start_graph`` lives on the target's own vertex labels.
    """

    base_kind: str  # "CliqueUnion" or "BrUnion"
    r: int
    start_graph: Graph
    coloring: Coloring
    moves: tuple[SwitchMove, ...]
    bipartition: Bipartition | None = None

    def replay_moves(self) -> list[SwitchMove]:
        return [m.inverse() for m in reversed(self.moves)]


def replay(cert: SwitchCertificate) -> Graph:
    """Apply the certificate's moves base-to-graph, validating each one."""
    g = cert.start_graph
    for step, m in enumerate(cert.replay_moves()):
        try:
            if cert.base_kind == "BrUnion":
                g = apply_bipartite_switch(g, cert.coloring, cert.bipartition, m)
            else:
                g = apply_switch(g, cert.coloring, m)
        except InvalidSwitch as exc:
            raise ReplayError(step, exc) from exc
    return g


def _unique_nbr(adj: list[set[int]], c: Coloring, v: int, color: int) -> int:
    hits = [w for w in adj[v] if c[w] == color]
    assert len(hits) == 1, f"vertex {v} has {len(hits)} neighbors of color {color}"
    return hits[0]


def _switch_in_place(adj: list[set[int]], m: SwitchMove) -> None:
    u1, v1, u2, v2 = m
    adj[u1].remove(v1)
    adj[v1].remove(u1)
    adj[u2].remove(v2)
    adj[v2].remove(u2)
    adj[u1].add(v2)
    adj[v2].add(u1)
    adj[u2].add(v1)
    adj[v1].add(u2)


def _to_graph(n: int, adj: list[set[int]]) -> Graph:
    return Graph.from_edges(n, [(u, w) for u in range(n) for w in adj[u] if u < w])


def decompose_to_cliques(g: Graph, c: Coloring) -> SwitchCertificate:
    """Switch ``g`` apart into disjoint ``K_{r+1}`` blocks.

    Repeatedly takes the least-indexed remaining vertex of each color as
    representatives ``u_0..u_r``. For each non-adjacent pair ``u_i, u_j`` it
    switches ``u_i y`` and ``x u_j``, where ``y`` is the ``j``-colored neighbor
    of ``u_i`` and ``x`` the ``i``-colored neighbor of ``u_j``; this creates
    ``u_i u_j`` and never removes an edge between representatives. Once the
    representatives form a clique, that clique is a component and is set aside.
    """
    if not verify_totally_silver(g, c):
        raise ValueError("input coloring is not totally silver")
    _, r = degree_profile(g)
    adj = [set(a) for a in g.adj]
    active = [True] * g.n
    moves: list[SwitchMove] = []
    while any(active):
        reps = []
        for col in range(r + 1):
            reps.append(min(v for v in range(g.n) if active[v] and c[v] == col))
        for i in range(r + 1):
            for j in range(i + 1, r + 1):
                ui, uj = reps[i], reps[j]
                if uj in adj[ui]:
                    continue
                y = _unique_nbr(adj, c, ui, j)
                x = _unique_nbr(adj, c, uj, i)
                assert y != uj and x != ui and x != y and y not in adj[x]
                m = SwitchMove(ui, y, x, uj)
                _switch_in_place(adj, m)
                moves.append(m)
        for v in reps:
            assert adj[v] == set(reps) - {v}
            active[v] = False
    start = _to_graph(g.n, adj)
    cert = SwitchCertificate("CliqueUnion", r, start, c, tuple(moves))
    if replay(cert) != g:
        raise AssertionError("clique certificate does not replay to the input")
    return cert


def decompose_to_Br(g: Graph, c: Coloring, b: Bipartition | None = None) -> SwitchCertificate:
    """Switch a bipartite ``g`` apart into disjoint ``B_r`` blocks.

    Representatives ``u_i`` in X and ``v_j`` in Y (least index per color); for
    every ordered pair ``i != j`` the edge ``u_i v_j`` is created by switching
    ``u_i y`` with ``x v_j`` unless it is already there. Every move keeps
    ``u1, u2`` on side X.
    """
    if not verify_totally_silver(g, c):
        raise ValueError("input coloring is not totally silver")
    if b is None:
        b = bipartition(g)
        if b is None:
            raise ValueError("graph is not bipartite")
    elif not b.is_valid_for(g):
        raise ValueError("bipartition does not fit the graph")
    _, r = degree_profile(g)
    adj = [set(a) for a in g.adj]
    active = [True] * g.n
    moves: list[SwitchMove] = []
    while any(active):
        U = [min(v for v in range(g.n) if active[v] and c[v] == col and b.side[v] == 0) for col in range(r + 1)]
        V = [min(v for v in range(g.n) if active[v] and c[v] == col and b.side[v] == 1) for col in range(r + 1)]
        for i in range(r + 1):
            for j in range(r + 1):
                if i == j:
                    continue
                ui, vj = U[i], V[j]
                y = _unique_nbr(adj, c, ui, j)
                if y == vj:
                    continue
                x = _unique_nbr(adj, c, vj, i)
                assert x != ui and y not in adj[x]
                m = SwitchMove(ui, y, x, vj)
                _switch_in_place(adj, m)
                moves.append(m)
        block = set(U) | set(V)
        for v in block:
            assert adj[v] <= block
            active[v] = False
    start = _to_graph(g.n, adj)
    cert = SwitchCertificate("BrUnion", r, start, c, tuple(moves), b)
    if replay(cert) != g:
        raise AssertionError("B_r certificate does not replay to the input")
    return cert


def is_clique_block(g: Graph, r: int) -> bool:
    """Every component is a complete graph on ``r + 1`` vertices."""
    return all(
        len(comp) == r + 1 and all(len(g.adj[v]) == r for v in comp) for comp in components(g)
    )


def is_Br_block(g: Graph, r: int) -> bool:
    """Every component is ``r``-regular bipartite on ``2r + 2`` vertices with each
    vertex missing exactly one vertex of the opposite side."""
    for comp in components(g):
        if len(comp) != 2 * r + 2:
            return False
        h, _ = induced_subgraph(g, comp)
        regular, deg = degree_profile(h)
        sides = bipartition(h)
        if not regular or deg != r or sides is None:
            return False
        for v in range(h.n):
            opposite = sum(1 for w in range(h.n) if sides.side[w] != sides.side[v])
            if opposite - len(h.adj[v]) != 1:
                return False
    return True
