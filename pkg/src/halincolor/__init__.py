"""Oriented 8-coloring of Halin graphs through the tournament T7."""

from .colorer import CaseTag, ConstructionError, HalinColoring, color_halin
from .fans import FanColoring, color_fan, compose_fans
from .graph import OrientedGraph, Violation, ViolationKind, verify_oriented_coloring
from .halin import (
    BranchProfile,
    HalinError,
    OrientedHalin,
    PlaneTree,
    enumerate_halin,
    from_json,
    generate_random_halin,
    to_dot,
    to_json,
)
from .oracle import oriented_chromatic_number, witness_search
from .tournament import AffineMap, t7

__all__ = [
    "AffineMap",
    "BranchProfile",
    "CaseTag",
    "ConstructionError",
    "FanColoring",
    "HalinColoring",
    "HalinError",
    "OrientedGraph",
    "OrientedHalin",
    "PlaneTree",
    "Violation",
    "ViolationKind",
    "color_fan",
    "color_halin",
    "compose_fans",
    "enumerate_halin",
    "from_json",
    "generate_random_halin",
    "oriented_chromatic_number",
    "t7",
    "to_dot",
    "to_json",
    "verify_oriented_coloring",
    "witness_search",
]
