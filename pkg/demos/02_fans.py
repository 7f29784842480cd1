"""
Fans and their composition
==========================

Deleting one exterior arc of a Halin graph leaves a fan: a rooted tree
whose leaves form an oriented path. Any fan can be mapped into T7 with the
root on 0 and both path ends off 0, and two such colorings can be glued.
"""

from halincolor.checks import composition_sweep, minimal_fan
from halincolor.fans import FanColoring, color_fan, compose_fans
from halincolor.halin import fan_from_cycle_arc_removal, generate_random_halin

h = generate_random_halin(8, seed=4)
arc = h.cycle_arcs[0]
fan = fan_from_cycle_arc_removal(h, h.tree.parent[arc[0]], arc)
print("fan root", fan.root, "leaf path", fan.leaves)

c = color_fan(fan)
print("colors", dict(sorted(c.colors.items())))
print("root", c.colors[fan.root], "first leaf", c.colors[fan.fl], "last leaf", c.colors[fan.ll])

# two small fans glued by a root arc and a leaf arc
f1, c1 = minimal_fan(0, (2, 5))
f2, c2 = minimal_fan(10, (3, 6))
res = compose_fans(f1, FanColoring(f1, c1), f2, FanColoring(f2, c2), True, False)
print(f"maps {res.phi1} and {res.phi2}: last leaf gets {res.d1[f2.ll]} or {res.d2[f2.ll]}")

# every endpoint color and arc direction, on the smallest fans
sweep = composition_sweep()
print(f"{sweep.checked} configurations, {len(sweep.failures)} failures")
