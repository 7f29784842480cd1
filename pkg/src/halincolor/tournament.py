"""The Paley tournament on Z_7 and its affine automorphisms.

Vertices are the residues 0..6 and ``(i, j)`` is an arc exactly when
``j - i`` is a non-zero square mod 7, i.e. lies in ``{1, 2, 4}``. The maps
``x -> a*x + b`` with ``a`` a non-zero square permute the arcs, and negating
every color turns a homomorphism of ``G`` into one of ``G`` reversed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .graph import Coloring, OrientedGraph

ORDER = 7
SQUARES = frozenset({1, 2, 4})
NON_SQUARES = frozenset({3, 5, 6})
EXTRA_COLOR = 7

# _ARC[i][j] is True iff (i, j) is an arc of T7
_ARC = tuple(tuple((j - i) % ORDER in SQUARES for j in range(ORDER)) for i in range(ORDER))
_INVERSE = {1: 1, 2: 4, 4: 2, 3: 5, 5: 3, 6: 6}

__all__ = [
    "AffineMap",
    "EXTRA_COLOR",
    "NON_SQUARES",
    "SQUARES",
    "all_affine_maps",
    "apply_affine",
    "compose_coloring_with_affine",
    "inverse_mod7",
    "is_square",
    "is_t7_arc",
    "negate_coloring",
    "t7",
]


def is_t7_arc(i: int, j: int) -> bool:
    return _ARC[i][j]


def is_square(x: int) -> bool:
    """Whether ``x`` lies in the orbit {1, 2, 4} (as opposed to {3, 5, 6})."""
    return x % ORDER in SQUARES


def inverse_mod7(x: int) -> int:
    return _INVERSE[x % ORDER]


def t7() -> OrientedGraph:
    arcs = frozenset((i, j) for i in range(ORDER) for j in range(ORDER) if _ARC[i][j])
    return OrientedGraph(ORDER, arcs)


@dataclass(frozen=True, order=True)
class AffineMap:
    """The map ``x -> a*x + b (mod 7)`` with ``a`` in {1, 2, 4}."""

    a: int
    b: int

    def __post_init__(self):
        if self.a not in SQUARES:
            raise ValueError(f"multiplier {self.a} is not in {{1, 2, 4}}")
        if not 0 <= self.b < ORDER:
            raise ValueError(f"offset {self.b} outside 0..6")

    def __call__(self, x: int) -> int:
        return (self.a * x + self.b) % ORDER

    def then(self, other: "AffineMap") -> "AffineMap":
        """``other`` applied after ``self``."""
        return AffineMap(self.a * other.a % ORDER, (other.a * self.b + other.b) % ORDER)

    def inverse(self) -> "AffineMap":
        ai = inverse_mod7(self.a)
        return AffineMap(ai, (-ai * self.b) % ORDER)

    def __str__(self) -> str:
        head = "x" if self.a == 1 else f"{self.a}x"
        return head if self.b == 0 else f"{head}+{self.b}"


IDENTITY = AffineMap(1, 0)


def all_affine_maps() -> Iterator[AffineMap]:
    for a in sorted(SQUARES):
        for b in range(ORDER):
            yield AffineMap(a, b)


def apply_affine(m: AffineMap, x: int) -> int:
    if not 0 <= x < ORDER:
        raise ValueError(f"color {x} is not a vertex of T7")
    return m(x)


def _check_t7_colors(c: Coloring) -> None:
    for v, x in c.items():
        if not 0 <= x < ORDER:
            raise ValueError(f"vertex {v} has color {x}, which is not a vertex of T7")


def compose_coloring_with_affine(c: Coloring, m: AffineMap) -> dict[int, int]:
    _check_t7_colors(c)
    return {v: m(x) for v, x in c.items()}


def negate_coloring(c: Mapping[int, int]) -> dict[int, int]:
    _check_t7_colors(c)
    return {v: (-x) % ORDER for v, x in c.items()}
