"""
Totally silver colorings
========================

Build a few cubic graphs, look for colorings where every closed neighborhood
sees all four colors, and compare with the chromatic number of the square.
"""

from totsilver import gen_E, gen_petersen, solve_totally_silver, verify_totally_silver
from totsilver.silver import check_necessary, chromatic_number_square

# E_6 ships with a coloring; check it
e6 = gen_E(6)
print("E6 coloring verifies:", verify_totally_silver(e6.graph, e6.coloring))

# E_5 has none, and its square needs six colors rather than four
e5 = gen_E(5).graph
print("E5 solver:", solve_totally_silver(e5))
print("chi(E5^2) =", chromatic_number_square(e5, 10))

# the Petersen graph fails an easy counting condition before any search
print(check_necessary(gen_petersen(5, 2)))
