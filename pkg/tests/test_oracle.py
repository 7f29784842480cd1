import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from halincolor.colorer import color_halin
from halincolor.graph import OrientedGraph, find_violation
from halincolor.halin import generate_random_halin
from halincolor.oracle import (
    AboveKmax,
    BudgetExceeded,
    OchromResult,
    exists_k_coloring,
    oriented_chromatic_number,
    search_records,
    witness_search,
)


def cycle(n):
    return OrientedGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def test_exists_examples():
    assert exists_k_coloring(OrientedGraph(2, frozenset({(0, 1)})), 2) is not None
    assert exists_k_coloring(cycle(5), 4) is None
    found = exists_k_coloring(cycle(6), 3)
    assert found is not None and find_violation(cycle(6).arcs, found) is None
    assert find_violation(cycle(6).arcs, dict(enumerate([0, 1, 2, 0, 1, 2]))) is None
    with pytest.raises(ValueError):
        exists_k_coloring(cycle(3), 0)


@pytest.mark.parametrize("n,chi", [(3, 3), (4, 4), (5, 5), (6, 3), (7, 4), (8, 4)])
def test_directed_cycles(n, chi):
    res = oriented_chromatic_number(cycle(n))
    assert res.value == chi
    assert find_violation(cycle(n).arcs, res.witness) is None


def test_directed_path():
    assert oriented_chromatic_number(OrientedGraph(3, frozenset({(0, 1), (1, 2)}))).value == 3


def test_empty_and_edgeless():
    assert oriented_chromatic_number(OrientedGraph(3)).value == 1


def test_above_kmax():
    res = oriented_chromatic_number(cycle(5), kmax=4)
    assert isinstance(res, AboveKmax) and res.kmax == 4


def test_budget():
    with pytest.raises(BudgetExceeded) as e:
        oriented_chromatic_number(cycle(11), budget=5)
    assert e.value.nodes > 5


def test_k4_seed_one():
    h = generate_random_halin(3, seed=1)
    res = oriented_chromatic_number(h.graph)
    assert isinstance(res, OchromResult)
    assert res.value <= len(set(color_halin(h).colors.values())) <= 8


def _brute_chi(g):
    for k in range(1, g.n + 1):
        for cols in itertools.product(range(k), repeat=g.n):
            if find_violation(g.arcs, dict(enumerate(cols))) is None:
                return k
    return 0


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 6))
    arcs = set()
    for u, v in itertools.combinations(range(n), 2):
        ch = draw(st.integers(0, 2))
        if ch:
            arcs.add((u, v) if ch == 1 else (v, u))
    return OrientedGraph(n, frozenset(arcs))


@given(small_graphs())
def test_matches_brute_force(g):
    assert oriented_chromatic_number(g).value == _brute_chi(g)


def test_witness_search_three_leaves():
    report = witness_search(3)
    assert report.instances == 64
    # every orientation of K4 needs four colors
    assert report.max_chi == 4 and dict(report.histogram) == {4: 64}
    assert report.witness_count == 64
    assert report.summary() == witness_search(3).summary()


def test_search_records_parallel_matches_serial():
    serial = list(search_records(3, timing=False, random_count=4, seed=5))
    parallel = list(search_records(3, timing=False, random_count=4, seed=5, jobs=2))
    assert serial == parallel
    assert len(serial) == 68
    assert all(r["status"] == "ok" for r in serial)


def test_search_records_budget():
    recs = list(search_records(3, budget=1, timing=False))
    assert all(r["status"] == "budget" and r["chi"] is None for r in recs)
    report = witness_search(3, budget=1)
    assert report.exhausted == 64 and report.witness is None
