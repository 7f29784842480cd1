"""
Exact oriented chromatic numbers
================================

A backtracking search over color classes gives the exact value on small
graphs, which bounds how far the constructive coloring is from optimal.
"""

from halincolor.colorer import color_halin
from halincolor.graph import OrientedGraph
from halincolor.halin import generate_random_halin
from halincolor.oracle import oriented_chromatic_number, witness_search

for n in range(3, 10):
    cycle = OrientedGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))
    print(f"directed C{n}: chi = {oriented_chromatic_number(cycle).value}")

for seed in range(5):
    h = generate_random_halin(9, seed=seed)
    exact = oriented_chromatic_number(h.graph)
    built = len(set(color_halin(h).colors.values()))
    print(f"seed {seed}: exact {exact.value}, constructive {built}, {exact.nodes} search nodes")

# largest exact value over all instances with at most four leaves
report = witness_search(4)
print("max chi", report.max_chi, "histogram", dict(sorted(report.histogram.items())))
