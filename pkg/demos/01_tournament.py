"""
The seven-vertex tournament T7
==============================

Every coloring built by this package is a homomorphism into T7, the
tournament on 0..6 with an arc i -> j whenever j - i is 1, 2 or 4 mod 7.
"""

from halincolor.checks import automorphism_sweep
from halincolor.graph import OrientedGraph, is_homomorphism, reverse_graph
from halincolor.tournament import AffineMap, negate_coloring, t7

# each vertex beats exactly three others
g = t7()
for v in range(7):
    print(v, "->", g.out_neighbors[v])

# x -> a*x + b is an automorphism exactly when a is 1, 2 or 4
good, bad = automorphism_sweep()
print(f"{good.checked} maps preserve every arc; all {bad.checked} others break one")

phi = AffineMap(2, 2)
print(f"{phi} sends 0..6 to", [phi(x) for x in range(7)])

# negating a homomorphism gives a homomorphism of the reversed graph
path = OrientedGraph(3, frozenset({(0, 1), (1, 2)}))
h = {0: 0, 1: 1, 2: 3}
print("h is a homomorphism:", is_homomorphism(path, g, h))
print("-h on the reversed path:", is_homomorphism(reverse_graph(path), g, negate_coloring(h)))
