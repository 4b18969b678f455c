"""
Silver graphs of girth 9 and 10
===============================

Attach a star to every third vertex of a long cycle, with offsets chosen to
avoid short cycles. The bipartite double cover of the girth 9 example is
bipartite, has girth 10, and inherits the coloring.
"""

from totsilver import gen_cycle_star, verify_totally_silver
from totsilver.graph import bipartite_double_cover, bipartition, girth
from totsilver.silver import Coloring

g9 = gen_cycle_star(15, 7, 20)
print("order", g9.graph.n, "girth", girth(g9.graph), "silver", verify_totally_silver(g9.graph, g9.coloring))

g10 = gen_cycle_star(22, 8, 22)
print("order", g10.graph.n, "girth", girth(g10.graph))

h = bipartite_double_cover(g9.graph)
lifted = Coloring(g9.coloring.colors * 2, 4)
print("cover: order", h.n, "girth", girth(h), "bipartite", bipartition(h) is not None,
      "silver", verify_totally_silver(h, lifted))
