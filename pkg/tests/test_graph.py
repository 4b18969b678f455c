import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    brute_distances,
    brute_girth,
    brute_isomorphic,
    brute_vertex_connectivity_at_least,
    to_nx,
)
from totsilver.families import gen_B, gen_E, gen_L, gen_petersen
from totsilver.graph import (
    Graph,
    bipartite_double_cover,
    bipartition,
    complete_bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    degree_profile,
    disjoint_union,
    edge_cuts_of_size,
    find_isomorphism,
    girth,
    hypercube_graph,
    is_connected,
    is_isomorphic,
    path_graph,
    square,
    vertex_connectivity_at_least,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_from_edges_rejects_loops_and_range():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    assert Graph.from_edges(3, [(0, 1), (1, 0)]).m == 1


@given(graphs())
def test_graph_invariants(g):
    assert sum(len(a) for a in g.adj) == 2 * g.m
    for u in range(g.n):
        assert u not in g.adj[u]
        for w in g.adj[u]:
            assert u in g.adj[w]


def test_degree_profile():
    assert degree_profile(complete_graph(4)) == (True, 3)
    assert degree_profile(path_graph(3)) == (False, None)
    assert degree_profile(gen_B(3).graph) == (True, 3)


def test_girth_examples():
    assert girth(cycle_graph(6)) == 6
    assert girth(gen_petersen(5, 2)) == 5
    assert girth(Graph.from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)])) == math.inf


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=10))
def test_girth_matches_cycle_enumeration(g):
    assert girth(g) == brute_girth(g)


def test_components_examples():
    two_triangles = disjoint_union([complete_graph(3), complete_graph(3)])
    assert components(two_triangles) == [[0, 1, 2], [3, 4, 5]]
    assert is_connected(cycle_graph(6))
    assert components(Graph(0)) == []


@given(graphs())
def test_components_partition(g):
    comps = components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert len(comps) == nx.number_connected_components(to_nx(g))


def test_vertex_connectivity_examples():
    assert vertex_connectivity_at_least(complete_graph(4), 3)
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert not vertex_connectivity_at_least(bowtie, 2)
    assert vertex_connectivity_at_least(gen_E(6).graph, 3)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9), st.integers(1, 3))
def test_vertex_connectivity_matches_flow(g, k):
    if g.n == 0 or not nx.is_connected(to_nx(g)):
        assert vertex_connectivity_at_least(g, k) == (g.n <= 1)
    else:
        assert vertex_connectivity_at_least(g, k) == brute_vertex_connectivity_at_least(g, k)


@pytest.mark.parametrize("g", [gen_petersen(8, 3), gen_L(7), gen_E(4).graph, gen_petersen(10, 2)])
def test_vertex_connectivity_cubic_families(g):
    assert vertex_connectivity_at_least(g, 3) == brute_vertex_connectivity_at_least(g, 3)


def _brute_cuts(g, s):
    from itertools import combinations

    found = []
    for pair in combinations(g.edge_list(), s):
        h = g.with_edges(remove=pair)
        if is_connected(h):
            continue
        # minimality: no proper subset already disconnects
        if all(is_connected(g.with_edges(remove=[e])) for e in pair) or s == 1:
            found.append(tuple(pair))
    return found


def test_edge_cuts_examples():
    p2 = path_graph(2)
    assert [c.cut_edges for c in edge_cuts_of_size(p2, 1)] == [((0, 1),)]
    assert len(edge_cuts_of_size(cycle_graph(6), 2)) == 15
    assert edge_cuts_of_size(complete_graph(4), 2) == []


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8), st.integers(1, 2))
def test_edge_cuts_match_brute_force(g, s):
    if g.n == 0 or not is_connected(g):
        return
    cuts = edge_cuts_of_size(g, s)
    assert [c.cut_edges for c in cuts] == _brute_cuts(g, s)
    for c in cuts:
        assert 0 in c.side_s and len(c.side_s) < g.n
        crossing = [e for e in g.edge_list() if (e[0] in c.side_s) != (e[1] in c.side_s)]
        assert tuple(crossing) == c.cut_edges


def test_bipartition_examples():
    b = bipartition(cycle_graph(6))
    assert b.side == (0, 1, 0, 1, 0, 1)
    assert bipartition(cycle_graph(5)) is None
    assert bipartition(gen_L(12)) is not None


@given(graphs())
def test_bipartition_matches_networkx(g):
    b = bipartition(g)
    assert (b is not None) == nx.is_bipartite(to_nx(g))
    if b is not None:
        assert b.is_valid_for(g)


def test_square_examples():
    assert square(cycle_graph(5)) == complete_graph(5)
    assert square(complete_graph(4)) == complete_graph(4)
    sq6 = square(cycle_graph(6))
    assert degree_profile(sq6) == (True, 4)
    assert not sq6.has_edge(0, 3)


@settings(max_examples=50, deadline=None)
@given(graphs())
def test_square_matches_distances(g):
    d = brute_distances(g)
    h = square(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert h.has_edge(u, v) == (1 <= d[u][v] <= 2)
    assert g.edges <= h.edges


def test_double_cover_examples():
    assert is_isomorphic(bipartite_double_cover(complete_graph(3)), cycle_graph(6))
    assert is_isomorphic(bipartite_double_cover(complete_graph(4)), gen_B(3).graph)
    two_c6 = bipartite_double_cover(cycle_graph(6))
    assert sorted(len(c) for c in components(two_c6)) == [6, 6]


@pytest.mark.parametrize("m", range(3, 9))
def test_double_cover_lifts_cycles(m):
    h = bipartite_double_cover(cycle_graph(m))
    comps = components(h)
    if m % 2:
        assert len(comps) == 1 and is_isomorphic(h, cycle_graph(2 * m))
    else:
        assert len(comps) == 2 and all(len(c) == m for c in comps)


@settings(max_examples=50, deadline=None)
@given(graphs())
def test_double_cover_bipartite_and_girth(g):
    h = bipartite_double_cover(g)
    assert bipartition(h) is not None
    assert girth(h) >= girth(g)
    # vertex (u, i) is numbered u + (i - 1) n
    for u, v in g.edges:
        assert h.has_edge(u, v + g.n) and h.has_edge(v, u + g.n)
    assert h.m == 2 * g.m


def test_isomorphism_examples():
    assert is_isomorphic(gen_B(2).graph, cycle_graph(6))
    assert is_isomorphic(gen_B(3).graph, hypercube_graph(3))
    assert not is_isomorphic(complete_graph(4), cycle_graph(4))
    assert is_isomorphic(gen_petersen(5, 2), nx_petersen())


def nx_petersen():
    h = nx.petersen_graph()
    return Graph.from_edges(h.number_of_nodes(), h.edges())


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_isomorphism_finds_relabelings(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    f = find_isomorphism(g, h)
    assert f is not None
    assert sorted(f.values()) == list(range(g.n))
    assert all(h.has_edge(f[u], f[v]) for u, v in g.edges)
    assert is_isomorphic(h, g)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_matches_permutation_oracle(g1, g2):
    assert is_isomorphic(g1, g2) == brute_isomorphic(g1, g2)


def test_isomorphism_rejects_cospectral_like_pairs():
    # same degree sequence and WL colors: C6 vs two triangles
    assert not is_isomorphic(cycle_graph(6), disjoint_union([complete_graph(3)] * 2))
    # Mobius-Kantor P(8,3) vs the 8-prism: both cubic on 16 vertices
    assert not is_isomorphic(gen_petersen(8, 3), gen_petersen(8, 1))


def test_disjoint_union():
    g = disjoint_union([complete_graph(4), complete_graph(4)])
    assert (g.n, g.m) == (8, 12)
    assert disjoint_union([]) == Graph(0)
    g = disjoint_union([cycle_graph(6), complete_graph(4)])
    assert (g.n, g.m) == (10, 12)
    assert g.has_edge(6, 9)


def test_complete_bipartite():
    g = complete_bipartite_graph(3, 3)
    assert degree_profile(g) == (True, 3) and bipartition(g) is not None
