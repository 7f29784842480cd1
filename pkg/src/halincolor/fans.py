"""Coloring fans into T7.

``color_fan`` colors any fan so that its root gets 0 and both ends of the
leaf path get non-zero colors. ``compose_fans`` glues two such colorings
along the arcs ``s1`` (root to root) and ``s2`` (last leaf of the first fan
to first leaf of the second) and returns two colorings that agree on the
first fan but differ on the new last leaf.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .graph import find_violation
from .halin import Fan, compose_fan_structure
from .tournament import AffineMap, inverse_mod7, is_t7_arc

__all__ = [
    "COMPOSITION_TABLE",
    "CompositionResult",
    "FanColoring",
    "FanColoringError",
    "color_fan",
    "composition_maps",
    "compose_fans",
    "normalize_endpoint",
    "normalizing_multiplier",
]


class FanColoringError(RuntimeError):
    """A fan coloring broke one of its guarantees.

    Fan coloring and composition always succeed, so this signals a bug.
    """


# (c1(ll(F1)), c2(fl(F2)), s2 runs ll(F1) -> fl(F2)) -> (phi1, phi2)
# after the endpoint colors have been normalised into {1, 3} and s1 runs
# r(F1) -> r(F2). The (3, 1, forward) row is handled by _special_row.
COMPOSITION_TABLE: dict[tuple[int, int, bool], tuple[AffineMap, AffineMap] | None] = {
    (1, 1, True): (AffineMap(1, 1), AffineMap(1, 2)),
    (1, 1, False): (AffineMap(2, 2), AffineMap(2, 4)),
    (1, 3, True): (AffineMap(2, 4), AffineMap(4, 4)),
    (1, 3, False): (AffineMap(1, 1), AffineMap(1, 4)),
    (3, 1, True): None,
    (3, 1, False): (AffineMap(4, 2), AffineMap(4, 4)),
    (3, 3, True): (AffineMap(1, 1), AffineMap(1, 2)),
    (3, 3, False): (AffineMap(4, 1), AffineMap(4, 4)),
}


def _special_row(last: int) -> tuple[AffineMap, AffineMap]:
    # x+4 and 2x+2 agree only at x = 2. For that last-leaf color the second
    # map must still send 0 into {1,2,4} and 1 to an out-neighbour of 3:
    # 4x+1 is the only automorphism doing so with 4x+1 != x+4 at 2.
    # (4x+4 would color s2 as 3 -> 1, which is not a T7 arc.)
    if last == 2:
        return AffineMap(1, 4), AffineMap(4, 1)
    return AffineMap(1, 4), AffineMap(2, 2)


def normalizing_multiplier(x: int) -> int:
    """The ``m`` in {1, 2, 4} with ``m * x mod 7`` in {1, 3}."""
    x %= 7
    if x == 0:
        raise ValueError("cannot normalise color 0")
    for m in (1, 2, 4):
        if m * x % 7 in (1, 3):
            return m
    raise AssertionError("unreachable")  # every non-zero residue has one


def composition_maps(ll1: int, fl2: int, ll2: int, s1_forward: bool,
                     s2_forward: bool) -> tuple[AffineMap, AffineMap]:
    """Two automorphisms to apply to the second fan's coloring.

    Arguments are the colors ``c1(ll(F1))``, ``c2(fl(F2))``, ``c2(ll(F2))``
    (all non-zero, roots colored 0) and the arc directions. The returned maps
    fit the second coloring to the first across ``s1`` and ``s2`` and send
    ``ll2`` to two different colors.
    """
    if 0 in (ll1 % 7, fl2 % 7, ll2 % 7):
        raise FanColoringError("endpoint colors of composed fans must be non-zero")
    sign = 1 if s1_forward else -1
    # negating every color turns a homomorphism of F into one of F reversed
    m1 = normalizing_multiplier(sign * ll1)
    m2 = normalizing_multiplier(sign * fl2)
    e1 = m1 * sign * ll1 % 7
    e2 = m2 * sign * fl2 % 7
    forward = s2_forward if sign == 1 else not s2_forward
    row = COMPOSITION_TABLE[(e1, e2, forward)]
    if row is None:
        row = _special_row(m2 * sign * ll2 % 7)
    # undo on the whole fan: multiply by m1^-1, then negate back
    back = inverse_mod7(m1)
    out = []
    for phi in row:
        a = back * phi.a * m2 % 7
        b = sign * back * phi.b % 7
        out.append(AffineMap(a, b))
    return out[0], out[1]


def _color_fan_raw(fan: Fan) -> dict[int, int]:
    children = fan.children
    arcs = fan.arcs
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for v in reversed(fan.vertices):
        kids = children.get(v, ())
        if kids:
            first[v] = first[kids[0]]
            last[v] = last[kids[-1]]
        else:
            first[v] = last[v] = v

    def color(v: int, j: int) -> dict[int, int]:
        # fan made of v and the subtrees of its first j sons
        kids = children[v]
        son = kids[j - 1]
        down = (v, son) in arcs
        if j == 1:
            if not children.get(son):
                return {v: 0, son: 1 if down else 3}
            sub = color(son, len(children[son]))
            lo, hi = sub[first[son]], sub[last[son]]
            for b in ((1, 2, 4) if down else (3, 5, 6)):
                if (lo + b) % 7 and (hi + b) % 7:
                    break
            else:
                raise FanColoringError(f"no shift keeps colors {lo}, {hi} non-zero")
            out = {x: (c + b) % 7 for x, c in sub.items()}
            out[v] = 0
            return out
        if not children.get(son):
            out = color(v, j - 1)
            prev = last[kids[j - 2]]
            cp = out[prev]
            to_prev = (son, prev) in arcs
            for x in range(1, 7):
                if (is_t7_arc(0, x) if down else is_t7_arc(x, 0)) and (
                        is_t7_arc(x, cp) if to_prev else is_t7_arc(cp, x)):
                    out[son] = x
                    return out
            raise FanColoringError(f"no color for leaf {son} next to colors 0 and {cp}")
        c1 = color(v, j - 1)
        c2 = color(son, len(children[son]))
        ll1 = last[kids[j - 2]]
        fl2, ll2 = first[son], last[son]
        phi1, phi2 = composition_maps(c1[ll1], c2[fl2], c2[ll2], down, (ll1, fl2) in arcs)
        phi = phi1 if phi1(c2[ll2]) else phi2
        for x, c in c2.items():
            c1[x] = phi(c)
        return c1

    return color(fan.root, len(children[fan.root]))


def _check_t7_fan(fan: Fan, colors: Mapping[int, int]) -> None:
    if colors[fan.root] != 0 or colors[fan.fl] == 0 or colors[fan.ll] == 0:
        raise FanColoringError(
            f"fan coloring has root {colors[fan.root]}, fl {colors[fan.fl]}, ll {colors[fan.ll]}")
    for u, v in fan.arcs:
        if not is_t7_arc(colors[u], colors[v]):
            raise FanColoringError(f"arc {(u, v)} colored {(colors[u], colors[v])} is not a T7 arc")


@dataclass(frozen=True, eq=False)
class FanColoring:
    """A T7 coloring of a fan with root 0 and non-zero path ends."""

    fan: Fan
    colors: dict[int, int]

    def check(self) -> None:
        _check_t7_fan(self.fan, self.colors)
        if find_violation(self.fan.arcs, self.colors) is not None:
            raise FanColoringError("fan coloring is not an oriented coloring")


class CompositionResult(NamedTuple):
    fan: Fan
    d1: dict[int, int]
    d2: dict[int, int]
    phi1: AffineMap
    phi2: AffineMap


def color_fan(fan: Fan) -> FanColoring:
    """Color ``fan`` into T7 with root 0 and non-zero first and last leaves.

    Recurses on the root's last son: a lone interior son is colored on its
    own and shifted; an exterior last son is colored after the rest of the
    fan; an interior last son is colored as a separate fan and composed.
    """
    result = FanColoring(fan, _color_fan_raw(fan))
    _check_t7_fan(fan, result.colors)
    return result


def compose_fans(f1: Fan, c1: FanColoring, f2: Fan, c2: FanColoring,
                 s1_forward: bool, s2_forward: bool) -> CompositionResult:
    """Color ``f1 + f2`` in two ways that agree on ``f1`` and differ on ``ll(f2)``.

    ``s1_forward`` means ``s1 = (r(f1), r(f2))``; ``s2_forward`` means
    ``s2 = (ll(f1), fl(f2))``.
    """
    for f, c in ((f1, c1), (f2, c2)):
        if c.fan is not f:
            raise ValueError("coloring does not belong to the given fan")
        try:
            _check_t7_fan(f, c.colors)
        except FanColoringError as e:
            raise ValueError(f"precondition violated: {e}") from None
    phi1, phi2 = composition_maps(c1.colors[f1.ll], c2.colors[f2.fl], c2.colors[f2.ll],
                                  s1_forward, s2_forward)
    fan = compose_fan_structure(f1, f2, s1_forward, s2_forward)
    out = []
    for phi in (phi1, phi2):
        d = dict(c1.colors)
        for x, c in c2.colors.items():
            d[x] = phi(c)
        out.append(d)
    d1, d2 = out
    for d in (d1, d2):
        bad = [(u, v) for u, v in fan.arcs if not is_t7_arc(d[u], d[v])]
        if bad or find_violation(fan.arcs, d) is not None:
            raise FanColoringError(
                f"composition failed: colors c1(ll)={c1.colors[f1.ll]}, c2(fl)={c2.colors[f2.fl]}, "
                f"c2(ll)={c2.colors[f2.ll]}, s1_forward={s1_forward}, s2_forward={s2_forward}, "
                f"maps {phi1}, {phi2}, bad arcs {bad}")
    if d1[f2.ll] == d2[f2.ll]:
        raise FanColoringError(f"both compositions give last leaf color {d1[f2.ll]}")
    return CompositionResult(fan, d1, d2, phi1, phi2)


def normalize_endpoint(c: FanColoring, which: str = "ll") -> tuple[FanColoring, int]:
    """Multiply every color by the ``m`` in {1, 2, 4} that moves the chosen
    endpoint color into {1, 3}."""
    if which not in ("fl", "ll"):
        raise ValueError("which must be 'fl' or 'll'")
    end = c.fan.fl if which == "fl" else c.fan.ll
    x = c.colors[end]
    if x == 0:
        raise ValueError(f"endpoint {end} has color 0")
    m = normalizing_multiplier(x)
    return FanColoring(c.fan, {v: m * col % 7 for v, col in c.colors.items()}), m
