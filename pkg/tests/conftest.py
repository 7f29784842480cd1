import pytest
from hypothesis import settings

from halincolor.halin import OrientedHalin, PlaneTree

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def k4(tree_bits: int = 0, cycle_bits: int = 0) -> OrientedHalin:
    """Star with three leaves plus the triangle over them."""
    tree = PlaneTree.from_nested(((), (), ()))
    return OrientedHalin.from_bits(tree, tree_bits | cycle_bits << 3)


def star(leaves: int, tree_bits: int = 0, cycle_bits: int = 0) -> OrientedHalin:
    tree = PlaneTree.from_nested(((),) * leaves)
    return OrientedHalin.from_bits(tree, tree_bits | cycle_bits << leaves)


@pytest.fixture
def k4_instance():
    return k4()


def tree_path(h, a, b):
    """Vertices on the tree path from ``a`` to ``b``."""
    par = h.tree.parent
    up = [a]
    while par[up[-1]] >= 0:
        up.append(par[up[-1]])
    down = [b]
    while down[-1] not in up:
        down.append(par[down[-1]])
    return up[:up.index(down[-1]) + 1] + down[-2::-1]


def extracted_fans(h):
    """Every fan obtained by deleting one exterior arc (rooted at any interior
    vertex of that face) or one exterior vertex (rooted at its father)."""
    from halincolor.halin import fan_from_cycle_arc_removal, fan_from_cycle_vertex_removal

    for arc in h.cycle_arcs:
        for r in tree_path(h, *arc)[1:-1]:
            yield fan_from_cycle_arc_removal(h, r, arc)
    for x in h.leaves:
        yield fan_from_cycle_vertex_removal(h, h.tree.parent[x], x)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
