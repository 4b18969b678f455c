"""
Switching down to cliques
=========================

A colored 2-switch keeps a coloring totally silver. Repeating them takes any
silver graph to disjoint copies of K4; the recorded moves, run backwards,
rebuild the graph, which makes a checkable certificate.
"""

from totsilver import decompose_to_Br, decompose_to_cliques, gen_Lprime, replay
from totsilver.formats import dumps_certificate
from totsilver.graph import components

cg = gen_Lprime(2)
cert = decompose_to_cliques(cg.graph, cg.coloring)
print(len(cert.moves), "moves;", [len(c) for c in components(cert.start_graph)], "block sizes")
print("replay reproduces the graph:", replay(cert) == cg.graph)

# bipartite graphs can stay bipartite the whole way, ending in copies of B_3
br = decompose_to_Br(cg.graph, cg.coloring)
print("B_r certificate replays:", replay(br) == cg.graph)

print("header:", dumps_certificate(cert).splitlines()[0])
