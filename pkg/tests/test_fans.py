import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import extracted_fans
from halincolor.fans import (
    COMPOSITION_TABLE,
    FanColoring,
    color_fan,
    compose_fans,
    composition_maps,
    normalize_endpoint,
    normalizing_multiplier,
)
from halincolor.checks import minimal_fan
from halincolor.graph import find_violation
from halincolor.halin import BranchProfile, Fan, enumerate_halin, generate_random_halin
from halincolor.tournament import AffineMap, all_affine_maps, is_t7_arc


def _two_vertex_fan(down):
    arcs = frozenset({(0, 1) if down else (1, 0)})
    return Fan(0, {0: (1,), 1: ()}, (1,), arcs)


def test_two_vertex_fans():
    c = color_fan(_two_vertex_fan(True)).colors
    assert c[0] == 0 and c[1] in (1, 2, 4)
    c = color_fan(_two_vertex_fan(False)).colors
    assert c[0] == 0 and c[1] in (3, 5, 6)


def _check(fan, colors):
    assert colors[fan.root] == 0
    assert colors[fan.fl] != 0 and colors[fan.ll] != 0
    assert all(is_t7_arc(colors[u], colors[v]) for u, v in fan.arcs)
    assert find_violation(fan.arcs, colors) is None
    assert set(colors) == set(fan.vertices)


def test_all_fans_of_small_instances():
    count = 0
    for h in enumerate_halin(4):
        for fan in extracted_fans(h):
            fan.check()
            _check(fan, color_fan(fan).colors)
            count += 1
    assert count > 10000


@given(st.integers(3, 25), st.integers(0, 2 ** 32), st.floats(0, 1), st.floats(0, 0.4))
def test_random_fans(leaves, seed, split, subdivide):
    h = generate_random_halin(leaves, BranchProfile(split, subdivide), seed)
    for fan in extracted_fans(h):
        _check(fan, color_fan(fan).colors)


def test_normalizing_multiplier():
    assert normalizing_multiplier(4) == 2
    assert normalizing_multiplier(1) == 1
    assert normalizing_multiplier(6) == 4
    for x in range(1, 7):
        assert normalizing_multiplier(x) * x % 7 in (1, 3)
    with pytest.raises(ValueError):
        normalizing_multiplier(0)


def test_table_row_forward_ones():
    phi1, phi2 = composition_maps(1, 1, 1, True, True)
    assert (phi1, phi2) == (AffineMap(1, 1), AffineMap(1, 2))
    assert (phi1(1), phi2(1)) == (2, 3)


def test_special_row_general():
    phi1, phi2 = composition_maps(3, 1, 1, True, True)
    assert (str(phi1), str(phi2)) == ("x+4", "2x+2")
    assert (phi1(1), phi2(1)) == (5, 4)
    assert is_t7_arc(3, 5) and is_t7_arc(3, 4)


def test_special_row_last_leaf_two():
    # 4x+4 sends fl(F2) to 1, and 3 -> 1 is not an arc of T7
    assert not is_t7_arc(3, AffineMap(4, 4)(1))
    # the only automorphism that keeps s1 and s2 proper and separates x = 2
    # from x+4 is 4x+1
    fits = [m for m in all_affine_maps()
            if m(0) in (1, 2, 4) and is_t7_arc(3, m(1)) and m(2) != AffineMap(1, 4)(2)]
    assert fits == [AffineMap(4, 1)]
    phi1, phi2 = composition_maps(3, 1, 2, True, True)
    assert (phi1, phi2) == (AffineMap(1, 4), AffineMap(4, 1))
    assert (phi1(2), phi2(2)) == (6, 2)


def test_table_has_eight_rows():
    assert len(COMPOSITION_TABLE) == 8
    assert sum(row is None for row in COMPOSITION_TABLE.values()) == 1


@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6), st.booleans(), st.booleans())
def test_composition_maps_denormalised(ll1, fl2, ll2, s1, s2):
    phi1, phi2 = composition_maps(ll1, fl2, ll2, s1, s2)
    for phi in (phi1, phi2):
        assert is_t7_arc(0, phi(0)) if s1 else is_t7_arc(phi(0), 0)
        assert is_t7_arc(ll1, phi(fl2)) if s2 else is_t7_arc(phi(fl2), ll1)
    assert phi1(ll2) != phi2(ll2)


def test_compose_fans_on_minimal_fans():
    f1, c1 = minimal_fan(0, (2, 5))
    f2, c2 = minimal_fan(10, (3, 6))
    res = compose_fans(f1, FanColoring(f1, c1), f2, FanColoring(f2, c2), True, False)
    assert res.fan.leaves == (1, 2, 11, 12)
    assert res.fan.children[0] == (1, 2, 10)
    for d in (res.d1, res.d2):
        assert all(d[v] == c1[v] for v in c1)
        assert find_violation(res.fan.arcs, d) is None
    assert res.d1[12] != res.d2[12]
    res.fan.check()


def test_compose_fans_preconditions():
    f1, c1 = minimal_fan(0, (2,))
    f2, c2 = minimal_fan(10, (3,))
    with pytest.raises(ValueError):
        compose_fans(f1, FanColoring(f2, c2), f2, FanColoring(f2, c2), True, True)
    with pytest.raises(ValueError):
        compose_fans(f1, FanColoring(f1, {0: 1, 1: 2}), f2, FanColoring(f2, c2), True, True)


def test_normalize_endpoint():
    f, c = minimal_fan(0, (1, 6))
    norm, m = normalize_endpoint(FanColoring(f, c), "ll")
    assert m == 4 and norm.colors[f.ll] == 3
    norm.check()
    with pytest.raises(ValueError):
        normalize_endpoint(FanColoring(f, c), "root")
