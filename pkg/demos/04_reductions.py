"""
Reducing cubic silver graphs
============================

Triangles, 4-cycles and 2-edge cuts can all be cut out while keeping the
coloring silver. What survives is K4 or a 3-connected graph of girth >= 6.
"""

from totsilver import gen_E, gen_moebius, reduce_fully, solve_totally_silver

for name, g, c in [
    ("E3", gen_E(3).graph, gen_E(3).coloring),
    ("V12", gen_moebius(6), solve_totally_silver(gen_moebius(6))),
    ("E6", gen_E(6).graph, gen_E(6).coloring),
]:
    done, steps = reduce_fully(g, c)
    print(name, [s.kind for s in steps], "->", [cg.graph.n for cg in done])
