"""Oriented graphs, colorings and the oriented-coloring verifier."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

Arc = tuple[int, int]
Coloring = Mapping[int, int]

__all__ = [
    "Arc",
    "Coloring",
    "ColoringError",
    "GraphError",
    "OrientedGraph",
    "Violation",
    "ViolationKind",
    "find_violation",
    "is_homomorphism",
    "quotient_arcs",
    "reverse_graph",
    "verify_oriented_coloring",
]


class GraphError(ValueError):
    """Raised when arcs do not describe an oriented graph."""


class ColoringError(ValueError):
    """Raised when a coloring is not total on its graph."""


@dataclass(frozen=True)
class OrientedGraph:
    """Loop-free digraph on vertices ``0..n-1`` with no opposite arc pairs."""

    n: int
    arcs: frozenset[Arc] = field(default_factory=frozenset)

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"arc {(u, v)} has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if (v, u) in arcs:
                raise GraphError(f"opposite arcs {(u, v)} and {(v, u)}")

    @classmethod
    def from_arcs(cls, arcs: Iterable[Arc], n: int | None = None) -> "OrientedGraph":
        arcs = frozenset(arcs)
        if n is None:
            n = 1 + max((max(a) for a in arcs), default=-1)
        return cls(n, arcs)

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            out[u].append(v)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            inn[v].append(u)
        return tuple(tuple(x) for x in inn)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.out_neighbors[v] + self.in_neighbors[v]

    def degree(self, v: int) -> int:
        return len(self.out_neighbors[v]) + len(self.in_neighbors[v])

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def __len__(self) -> int:
        return self.n


class ViolationKind(enum.Enum):
    ADJACENT_SAME_COLOR = "AdjacentSameColor"
    OPPOSING_COLOR_PAIR = "OpposingColorPair"


@dataclass(frozen=True)
class Violation:
    """Witness that a coloring breaks one of the two oriented-coloring rules.

    ``arcs`` holds one arc for ``ADJACENT_SAME_COLOR`` and two arcs
    ``(t, u), (v, w)`` with ``c(t) == c(w)`` and ``c(u) == c(v)`` for
    ``OPPOSING_COLOR_PAIR``.
    """

    kind: ViolationKind
    arcs: tuple[Arc, ...]
    colors: tuple[int, int]

    def __str__(self) -> str:
        shown = ", ".join(f"{a}->{b}" for a, b in self.arcs)
        return f"{self.kind.value}: arcs {shown} with colors {self.colors}"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "arcs": [list(a) for a in self.arcs],
            "colors": list(self.colors),
        }


def find_violation(arcs: Iterable[Arc], colors: Coloring) -> Violation | None:
    """Check the two oriented-coloring rules on an arbitrary arc set.

    Arcs are scanned in lexicographic order and the first witness is
    returned, so results are reproducible. Runs in O(m log m) because the
    arcs are indexed by their ordered color pair.
    """
    seen: dict[tuple[int, int], Arc] = {}
    for arc in sorted(arcs):
        cu, cv = colors[arc[0]], colors[arc[1]]
        if cu == cv:
            return Violation(ViolationKind.ADJACENT_SAME_COLOR, (arc,), (cu, cv))
        back = seen.get((cv, cu))
        if back is not None:
            return Violation(ViolationKind.OPPOSING_COLOR_PAIR, (back, arc), (cv, cu))
        seen.setdefault((cu, cv), arc)
    return None


def verify_oriented_coloring(g: OrientedGraph, c: Coloring) -> Violation | None:
    """Return ``None`` if ``c`` is an oriented coloring of ``g``, else a witness.

    Raises ColoringError when ``c`` misses a vertex or uses a color outside 0..7.
    """
    for v in range(g.n):
        if v not in c:
            raise ColoringError(f"coloring has no color for vertex {v}")
        if not 0 <= c[v] <= 7:
            raise ColoringError(f"color {c[v]} of vertex {v} outside 0..7")
    return find_violation(g.arcs, c)


def reverse_graph(g: OrientedGraph) -> OrientedGraph:
    return OrientedGraph(g.n, frozenset((v, u) for u, v in g.arcs))


def is_homomorphism(g: OrientedGraph, h: OrientedGraph, m: Mapping[int, int]) -> bool:
    """True iff every arc ``(u, v)`` of ``g`` lands on an arc ``(m[u], m[v])`` of ``h``."""
    target = h.arcs
    return all((m[u], m[v]) in target for u, v in g.arcs)


def quotient_arcs(g: OrientedGraph, c: Coloring) -> set[Arc]:
    """Arcs between color classes; may contain loops or opposite pairs."""
    return {(c[u], c[v]) for u, v in g.arcs}
