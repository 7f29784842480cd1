"""Eight-coloring of oriented Halin graphs.

Every construction colors almost everything through T7 (colors 0..6) and
uses the extra color 7 on at most one exterior vertex. The dispatcher picks
the construction from the length and orientation of the exterior cycle and
from the lowest interior vertex of the tree.
"""

from __future__ import annotations

import enum
import logging
from typing import NamedTuple

from .fans import color_fan, compose_fans
from .graph import find_violation
from .halin import (
    OrientedHalin,
    _build_fan,
    fan_from_cycle_arc_removal,
    fan_from_cycle_vertex_removal,
    fan_split,
    to_json,
)
from .tournament import EXTRA_COLOR, is_t7_arc

log = logging.getLogger(__name__)

__all__ = [
    "CaseTag",
    "ConstructionError",
    "HalinColoring",
    "classify",
    "color_directed_cycle",
    "color_halin",
    "color_interior_case1",
    "color_interior_case2",
    "color_interior_case3",
    "color_interior_case4",
    "color_mixed_cycle",
    "color_single_interior_uniform",
    "color_small_cycle",
]


class ConstructionError(RuntimeError):
    """A construction produced an invalid coloring (a bug, never expected)."""


class CaseTag(enum.Enum):
    SMALL_CYCLE = "SmallCycle"
    MIXED_CYCLE = "MixedCycle"
    INTERIOR_K1 = "Interior-k1"
    INTERIOR_FORWARD_ROOT = "Interior-ForwardRoot"
    INTERIOR_BACKWARD_ROOT = "Interior-BackwardRoot"
    INTERIOR_TURN = "Interior-Turn"
    SINGLE_INTERIOR_UNIFORM = "SingleInterior-Uniform"
    SINGLE_INTERIOR_TURN = "SingleInterior-Turn"


class HalinColoring(NamedTuple):
    colors: dict[int, int]
    case: CaseTag
    fallback: bool = False


class _Case4Result(NamedTuple):
    colors: dict[int, int]
    fallback: bool


def _fail(h: OrientedHalin, colors, what: str):
    violation = find_violation(h.arcs, colors)
    raise ConstructionError(f"{what} failed ({violation}); instance: {to_json(h)}")


def _valid(h: OrientedHalin, colors) -> bool:
    return find_violation(h.arcs, colors) is None


def _cycle_order(h: OrientedHalin) -> tuple[int, ...]:
    """Leaves in the direction of a uniformly oriented exterior cycle."""
    fwd = h.cycle_forward
    if all(fwd):
        return h.leaves
    if not any(fwd):
        return h.leaves[::-1]
    raise ValueError("exterior cycle is not uniformly oriented")


def _lowest_interior(h: OrientedHalin) -> int:
    tree = h.tree
    depth = tree.depth
    best = -1
    for v in tree.interior:
        if best < 0 or depth[v] > depth[best]:
            best = v
    return best


def _sons_in_cycle_order(h: OrientedHalin, r: int, order) -> list[int]:
    sons = set(h.tree.children[r])
    n = len(order)
    # start right after a leaf that is not a son of r
    start = next(i for i in range(n) if order[i] not in sons and order[(i + 1) % n] in sons)
    out = []
    i = start + 1
    while order[i % n] in sons:
        out.append(order[i % n])
        i += 1
    return out


# --------------------------------------------------------------------------
# directed cycles and small cycles


def color_directed_cycle(n: int) -> list[int]:
    """Colors for the directed cycle ``0 -> 1 -> ... -> n-1 -> 0``.

    Three colors when 3 divides ``n``, five for ``n = 5``, four otherwise.
    """
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    if n == 5:
        return [0, 1, 2, 3, 4]
    fours = n % 3  # number of 0,1,2,3 blocks; the rest are 0,1,2 blocks
    threes = (n - 4 * fours) // 3
    return [0, 1, 2, 3] * fours + [0, 1, 2] * threes


def color_small_cycle(h: OrientedHalin) -> dict[int, int]:
    """Distinct colors 3..7 on the exterior, a directed-triangle map on the tree."""
    leaves = h.leaves
    if not 3 <= len(leaves) <= 5:
        raise ValueError(f"small-cycle construction needs 3..5 exterior vertices, got {len(leaves)}")
    tree = h.tree
    arcs = h.arcs
    colors = {x: 3 + i for i, x in enumerate(leaves)}
    colors[tree.root] = 0
    for v in tree.interior:  # preorder, so parents come first
        for c in tree.children[v]:
            if c not in tree.leaf_index:
                colors[c] = (colors[v] + (1 if (v, c) in arcs else -1)) % 3
    if not _valid(h, colors):
        _fail(h, colors, "small-cycle construction")
    return colors


# --------------------------------------------------------------------------
# mixed exterior orientation


def _head_to_head(h: OrientedHalin) -> int | None:
    fwd = h.cycle_forward
    n = len(fwd)
    for j in range(n):
        # arc into leaves[j] from the left, and from the right
        if fwd[j - 1] and not fwd[j]:
            return h.leaves[j]
    return None


def color_mixed_cycle(h: OrientedHalin) -> dict[int, int]:
    """Remove a head-to-head exterior vertex, fan-color the rest, give it color 7."""
    v2 = _head_to_head(h)
    if v2 is None:
        raise ValueError("exterior cycle has no vertex with two incoming cycle arcs")
    r = h.tree.parent[v2]
    fan = fan_from_cycle_vertex_removal(h, r, v2)
    colors = color_fan(fan).colors
    colors[v2] = EXTRA_COLOR
    if not _valid(h, colors):
        _fail(h, colors, "mixed-cycle construction")
    return colors


# --------------------------------------------------------------------------
# uniform exterior orientation, at least two interior vertices


def color_interior_case1(h: OrientedHalin, r: int, p: int) -> dict[int, int]:
    """Lowest interior ``r`` with a single exterior son ``x1``."""
    order = _cycle_order(h)
    n = len(order)
    sons = h.tree.children[r]
    if len(sons) != 1 or sons[0] not in h.tree.leaf_index:
        raise ValueError(f"vertex {r} does not have exactly one exterior son")
    x1 = sons[0]
    i = order.index(x1)
    x0, x2 = order[i - 1], order[(i + 1) % n]
    path = [order[(i + t) % n] for t in range(1, n)]
    colors = dict(color_fan(_build_fan(h, p, path, cut=(r,))).colors)
    arcs = h.arcs
    pr_down = (p, r) in arcs
    rx_down = (r, x1) in arcs

    def fits(a, b, down):
        return is_t7_arc(a, b) if down else is_t7_arc(b, a)

    r_choices = [c for c in range(7) if fits(colors[p], c, pr_down)]
    if colors[x0] != colors[x2]:
        for c in r_choices:
            if c not in (colors[x0], colors[x2]):
                trial = dict(colors)
                trial[r] = c
                trial[x1] = EXTRA_COLOR
                if _valid(h, trial):
                    return trial
        _fail(h, colors, "case 1 (distinct flanking colors)")
    pairs = [(cr, cx) for cr in r_choices for cx in range(7) if fits(cr, cx, rx_down)]
    # (x0, x1) and (x1, x2) are cycle arcs in this orientation
    after_x0 = [pr for pr in pairs if is_t7_arc(colors[x0], pr[1])]
    before_x2 = [pr for pr in pairs if is_t7_arc(pr[1], colors[x2])]
    branches = [(after_x0, x2), (before_x2, x0)]
    if len(after_x0) < 3:
        branches.reverse()
    for candidates, star in branches:
        for cr, cx in candidates:
            trial = dict(colors)
            trial[r] = cr
            trial[x1] = cx
            trial[star] = EXTRA_COLOR
            if _valid(h, trial):
                return trial
    _fail(h, colors, "case 1 (equal flanking colors)")


def _split_and_compose(h: OrientedHalin, r: int, removed, what: str) -> dict[int, int]:
    split = fan_split(h, r, removed)
    f1, f2 = split.f1, split.f2
    c1, c2 = color_fan(f1), color_fan(f2)
    res = compose_fans(f1, c1, f2, c2, split.s1[0] == r, split.s2[0] == f1.ll)
    reattach, flanked, inner = f2.ll, f1.fl, f1.leaves[1]
    for d in (res.d1, res.d2):
        if d[reattach] == 0:
            if _valid(h, d):
                return d
            _fail(h, d, f"{what} (restored arc)")
    for d in (res.d1, res.d2):
        if d[reattach] != d[inner]:
            d = dict(d)
            d[flanked] = EXTRA_COLOR
            if _valid(h, d):
                return d
            _fail(h, d, f"{what} (extra color)")
    _fail(h, res.d1, what)


def color_interior_case2(h: OrientedHalin, r: int, p: int) -> dict[int, int]:
    """Arc ``(r, x1)``: cut ``(x0, x1)`` and compose the two fans."""
    order = _cycle_order(h)
    sons = _sons_in_cycle_order(h, r, order)
    if len(sons) < 2 or (r, sons[0]) not in h.arcs:
        raise ValueError(f"vertex {r} does not satisfy the forward-root case")
    x1 = sons[0]
    x0 = order[order.index(x1) - 1]
    return _split_and_compose(h, r, (x0, x1), "case 2")


def color_interior_case3(h: OrientedHalin, r: int, p: int) -> dict[int, int]:
    """Arc ``(x_k, r)``: cut ``(x_k, x_{k+1})`` and compose the mirrored fans."""
    order = _cycle_order(h)
    sons = _sons_in_cycle_order(h, r, order)
    if len(sons) < 2 or (sons[-1], r) not in h.arcs:
        raise ValueError(f"vertex {r} does not satisfy the backward-root case")
    xk = sons[-1]
    xk1 = order[(order.index(xk) + 1) % len(order)]
    return _split_and_compose(h, r, (xk, xk1), "case 3")


def color_interior_case4(h: OrientedHalin, r: int, xi: int) -> _Case4Result:
    """Arcs ``(x_i, r)`` and ``(r, x_{i+1})``: cut ``(x_i, x_{i+1})``, root the
    whole graph at ``r`` and put 7 on ``x_i`` or ``x_{i+1}``.

    ``xi`` is the exterior vertex ``x_i``. If none of the three planned
    assignments verifies, every recoloring of ``x_i, x_{i+1}`` with 7 on one of
    them is tried, and the result is flagged as a fallback.
    """
    order = _cycle_order(h)
    n = len(order)
    i = order.index(xi)
    xm, xi1, xi2 = order[i - 1], order[(i + 1) % n], order[(i + 2) % n]
    arcs = h.arcs
    if (xi, r) not in arcs or (r, xi1) not in arcs:
        raise ValueError(f"arcs ({xi}, {r}) and ({r}, {xi1}) are required")
    colors = dict(color_fan(fan_from_cycle_arc_removal(h, r, (xi, xi1))).colors)
    if colors[xm] != colors[xi1]:
        trial = dict(colors)
        trial[xi] = EXTRA_COLOR
    elif colors[xi] != colors[xi2]:
        trial = dict(colors)
        trial[xi1] = EXTRA_COLOR
    else:
        trial = dict(colors)
        b, a = colors[xi1], colors[xi2]
        for nb in (1, 2, 4):
            if nb != b and is_t7_arc(nb, a):
                trial[xi1] = nb
                break
        trial[xi] = EXTRA_COLOR
    if _valid(h, trial):
        return _Case4Result(trial, False)
    log.warning("case 4 fallback on %s", to_json(h))
    for star, other in ((xi, xi1), (xi1, xi)):
        for c in range(7):
            trial = dict(colors)
            trial[star] = EXTRA_COLOR
            trial[other] = c
            if _valid(h, trial):
                return _Case4Result(trial, True)
    _fail(h, colors, "case 4 fallback")


# --------------------------------------------------------------------------
# single interior vertex


def color_single_interior_uniform(h: OrientedHalin, r: int) -> dict[int, int]:
    """Directed exterior cycle colored on its own, centre gets one more color."""
    order = _cycle_order(h)
    arcs = h.arcs
    outward = [(r, x) in arcs for x in order]
    if len(h.tree.interior) != 1 or (any(outward) and not all(outward)):
        raise ValueError("needs one interior vertex whose spokes all point the same way")
    pattern = color_directed_cycle(len(order))
    colors = dict(zip(order, pattern))
    colors[r] = max(pattern) + 1
    if not _valid(h, colors):
        _fail(h, colors, "single-interior uniform construction")
    return colors


def _turn(h: OrientedHalin, r: int, sons) -> int | None:
    """First ``x_i`` with arcs ``(x_i, r)`` and ``(r, x_{i+1})`` among consecutive sons."""
    arcs = h.arcs
    for a, b in zip(sons, sons[1:]):
        if (a, r) in arcs and (r, b) in arcs:
            return a
    return None


# --------------------------------------------------------------------------
# dispatch


def classify(h: OrientedHalin) -> CaseTag:
    return _dispatch(h)[0]


def _dispatch(h: OrientedHalin):
    leaves = h.leaves
    if len(leaves) <= 5:
        return CaseTag.SMALL_CYCLE, ()
    fwd = h.cycle_forward
    if any(fwd) and not all(fwd):
        return CaseTag.MIXED_CYCLE, ()
    tree = h.tree
    arcs = h.arcs
    order = _cycle_order(h)
    if len(tree.interior) >= 2:
        r = _lowest_interior(h)
        p = tree.parent[r]
        sons = _sons_in_cycle_order(h, r, order)
        if len(sons) == 1:
            return CaseTag.INTERIOR_K1, (r, p)
        if (r, sons[0]) in arcs:
            return CaseTag.INTERIOR_FORWARD_ROOT, (r, p)
        if (sons[-1], r) in arcs:
            return CaseTag.INTERIOR_BACKWARD_ROOT, (r, p)
        return CaseTag.INTERIOR_TURN, (r, _turn(h, r, sons))
    r = tree.root
    outward = [(r, x) in arcs for x in order]
    if all(outward) or not any(outward):
        return CaseTag.SINGLE_INTERIOR_UNIFORM, (r,)
    cyclic = list(order) + [order[0]]
    return CaseTag.SINGLE_INTERIOR_TURN, (r, _turn(h, r, cyclic))


def color_halin(h: OrientedHalin) -> HalinColoring:
    """Oriented coloring of ``h`` with at most 8 colors, 7 used at most once."""
    case, args = _dispatch(h)
    fallback = False
    if case is CaseTag.SMALL_CYCLE:
        colors = color_small_cycle(h)
    elif case is CaseTag.MIXED_CYCLE:
        colors = color_mixed_cycle(h)
    elif case is CaseTag.INTERIOR_K1:
        colors = color_interior_case1(h, *args)
    elif case is CaseTag.INTERIOR_FORWARD_ROOT:
        colors = color_interior_case2(h, *args)
    elif case is CaseTag.INTERIOR_BACKWARD_ROOT:
        colors = color_interior_case3(h, *args)
    elif case is CaseTag.SINGLE_INTERIOR_UNIFORM:
        colors = color_single_interior_uniform(h, *args)
    else:
        colors, fallback = color_interior_case4(h, *args)
    if len(colors) != h.n or sum(c == EXTRA_COLOR for c in colors.values()) > 1:
        _fail(h, colors, f"{case.value} bookkeeping")
    return HalinColoring(colors, case, fallback)
