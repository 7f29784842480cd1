"""Exhaustive sweeps over the T7 properties, shared by ``selftest`` and the tests."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .fans import COMPOSITION_TABLE, FanColoring, _special_row, compose_fans
from .graph import OrientedGraph, find_violation, is_homomorphism, reverse_graph
from .halin import Fan
from .tournament import SQUARES, is_t7_arc, negate_coloring, t7

__all__ = [
    "SweepResult",
    "automorphism_sweep",
    "composition_sweep",
    "minimal_fan",
    "oriented_graphs",
    "reversal_sweep",
    "t7_homomorphisms",
    "table_sweep",
]


@dataclass
class SweepResult:
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def automorphism_sweep() -> tuple[SweepResult, SweepResult]:
    """(maps with a in {1,2,4} preserving all arcs, maps with a in {3,5,6} breaking one)."""
    arcs = t7().arcs
    good, bad = SweepResult(), SweepResult()
    for a in range(1, 7):
        for b in range(7):
            preserved = all(((a * i + b) % 7, (a * j + b) % 7) in arcs for i, j in arcs)
            if a in SQUARES:
                good.checked += 1
                if not preserved:
                    good.failures.append((a, b))
            else:
                bad.checked += 1
                if preserved:
                    bad.failures.append((a, b))
    return good, bad


def table_sweep() -> SweepResult:
    """Each table row keeps s1, s2 proper and separates every non-zero color."""
    res = SweepResult()
    for (e1, e2, forward), row in COMPOSITION_TABLE.items():
        rows = [row] if row is not None else [_special_row(last) for last in range(1, 7)]
        for last, (phi1, phi2) in enumerate(rows, start=1):
            res.checked += 1
            for phi in (phi1, phi2):
                x = phi(e2)
                if not is_t7_arc(0, phi(0)) or not (is_t7_arc(e1, x) if forward else is_t7_arc(x, e1)):
                    res.failures.append(((e1, e2, forward), str(phi)))
            clash = [x for x in range(1, 7) if phi1(x) == phi2(x)]
            if row is None:
                clash = [x for x in clash if x == last]
            if clash:
                res.failures.append(((e1, e2, forward), "agree at", clash))
    return res


def minimal_fan(root: int, ends: tuple[int, ...]) -> tuple[Fan, dict[int, int]]:
    """Root colored 0 with one leaf per entry of ``ends`` (the leaf colors);
    arcs follow T7."""
    colors = {root: 0}
    leaves = tuple(root + 1 + i for i in range(len(ends)))
    arcs = set()
    for x, c in zip(leaves, ends):
        colors[x] = c
        arcs.add((root, x) if is_t7_arc(0, c) else (x, root))
    for (x, cx), (y, cy) in zip(zip(leaves, ends), zip(leaves[1:], ends[1:])):
        arcs.add((x, y) if is_t7_arc(cx, cy) else (y, x))
    return Fan(root, {root: leaves, **{x: () for x in leaves}}, leaves, frozenset(arcs)), colors


def composition_sweep() -> SweepResult:
    """All endpoint colors and arc directions on minimal fans.

    6 choices each for c1(ll(F1)), c2(fl(F2)), c2(ll(F2)); both directions of
    s1 and s2; and F1 with one leaf or with two leaves: 1728 configurations.
    """
    res = SweepResult()
    for ll1, fl2, ll2, s1, s2, two in itertools.product(
            range(1, 7), range(1, 7), range(1, 7), (True, False), (True, False), (False, True)):
        res.checked += 1
        ends1 = (min(c for c in range(1, 7) if c != ll1), ll1) if two else (ll1,)
        ends2 = (fl2,) if fl2 == ll2 else (fl2, ll2)
        f1, c1 = minimal_fan(0, ends1)
        f2, c2 = minimal_fan(10, ends2)
        try:
            out = compose_fans(f1, FanColoring(f1, c1), f2, FanColoring(f2, c2), s1, s2)
        except Exception as e:  # noqa: BLE001 - every failure is recorded
            res.failures.append(((ll1, fl2, ll2, s1, s2, two), repr(e)))
            continue
        ok = (all(out.d1[v] == c1[v] == out.d2[v] for v in c1)
              and out.d1[f2.ll] != out.d2[f2.ll]
              and find_violation(out.fan.arcs, out.d1) is None
              and find_violation(out.fan.arcs, out.d2) is None)
        if not ok:
            res.failures.append(((ll1, fl2, ll2, s1, s2, two), "postcondition"))
    return res


def oriented_graphs(n: int):
    """Every oriented graph on vertices 0..n-1 (each pair: none, forward, backward)."""
    pairs = list(itertools.combinations(range(n), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (u, v), ch in zip(pairs, choice):
            if ch == 1:
                arcs.append((u, v))
            elif ch == 2:
                arcs.append((v, u))
        yield OrientedGraph(n, frozenset(arcs))


def t7_homomorphisms(g: OrientedGraph, limit: int | None = None, anchored: bool = False):
    """Homomorphisms of ``g`` into T7 by backtracking, in lexicographic order.

    ``anchored`` keeps only those coloring vertex 0 with 0; every
    homomorphism is a translate ``h + b`` of exactly one of them.
    """
    n = g.n
    earlier = [[(w, True) for w in g.out_neighbors[v] if w < v]
               + [(w, False) for w in g.in_neighbors[v] if w < v] for v in range(n)]
    col = [0] * n
    found = 0

    def rec(v):
        nonlocal found
        if v == n:
            found += 1
            yield dict(enumerate(col))
            return
        for c in (range(1) if anchored and v == 0 else range(7)):
            if all(is_t7_arc(c, col[w]) if out else is_t7_arc(col[w], c) for w, out in earlier[v]):
                col[v] = c
                yield from rec(v + 1)
                if limit is not None and found >= limit:
                    return

    yield from rec(0)


def reversal_sweep(max_n: int = 5, all_up_to: int = 4) -> SweepResult:
    """Negated homomorphisms are homomorphisms of the reversed graph.

    For graphs with at most ``all_up_to`` vertices every homomorphism is
    checked. Above that only anchored ones are: ``-(h + b) = -h - b``, so the
    claim for ``h`` carries over to all seven of its translates.
    """
    target = t7()
    res = SweepResult()
    for n in range(1, max_n + 1):
        for g in oriented_graphs(n):
            rg = reverse_graph(g)
            for hom in t7_homomorphisms(g, anchored=n > all_up_to):
                res.checked += 1
                if not is_homomorphism(rg, target, negate_coloring(hom)):
                    res.failures.append((sorted(g.arcs), hom))
    return res
