"""
Eight-coloring oriented Halin graphs
====================================

color_halin picks a construction from the exterior cycle and the lowest
interior vertex of the tree, then returns a verified coloring with at most
8 colors, the eighth used at most once.
"""

from collections import Counter

from halincolor.colorer import color_halin
from halincolor.graph import verify_oriented_coloring
from halincolor.halin import BranchProfile, count_halin, enumerate_halin, generate_random_halin, to_dot

h = generate_random_halin(12, seed=1)
res = color_halin(h)
print("case", res.case.value, "colors used", len(set(res.colors.values())))
print("verifier:", verify_oriented_coloring(h.graph, res.colors) or "valid")

# a uniformly oriented exterior cycle exercises the interior-vertex cases
cases = Counter()
for seed in range(500):
    g = generate_random_halin(10, BranchProfile(0.5, 0.2, uniform_cycle=True), seed)
    cases[color_halin(g).case.value] += 1
print(dict(cases))

# every instance with at most five leaves
print(count_halin(5), "instances with <= 5 leaves")
worst = max(len(set(color_halin(g).colors.values())) for g in enumerate_halin(5))
print("most colors used:", worst)

with open("halin.dot", "w") as f:
    f.write(to_dot(h, res.colors))
print("wrote halin.dot")
