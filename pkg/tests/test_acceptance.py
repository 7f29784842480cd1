"""Acceptance criteria, one printed PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -s`` to see the lines as they happen;
they are repeated in the terminal summary. Set ``HALIN_WITNESS_LEAVES=6``
to run the (non-gating) witness search on the 1.6 million six-leaf
instances instead of the default five.
"""

import os
import time

from conftest import ACCEPTANCE_LINES, extracted_fans
from halincolor.checks import automorphism_sweep, composition_sweep, reversal_sweep
from halincolor.colorer import color_halin
from halincolor.fans import COMPOSITION_TABLE, _special_row, color_fan
from halincolor.graph import OrientedGraph, find_violation, verify_oriented_coloring
from halincolor.halin import BranchProfile, count_halin, enumerate_halin, generate_random_halin, to_json
from halincolor.oracle import OchromResult, oriented_chromatic_number, witness_search
from halincolor.tournament import is_t7_arc


def report(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def _colored_ok(h, colors):
    return (verify_oriented_coloring(h.graph, colors) is None
            and len(set(colors.values())) <= 8
            and list(colors.values()).count(7) <= 1)


def test_criterion_1_automorphisms():
    (good, bad), secs = _timed(automorphism_sweep)
    ok = good.ok and bad.ok and good.checked == 21 and bad.checked == 21 and secs < 1
    report(1, ok, f"{good.checked} affine maps preserve all 21 arcs, {bad.checked} non-square "
                  f"multipliers each break one ({secs:.3f}s, limit 1s)")


def test_criterion_2_reversal():
    res, secs = _timed(reversal_sweep)
    ok = res.ok and secs <= 60
    report(2, ok, f"{res.checked} homomorphisms on all oriented graphs with <= 5 vertices, "
                  f"{len(res.failures)} failures ({secs:.1f}s, limit 60s)")


# reference s2 color pairs (d1, d2) per normalised row;
# each pair is (color on ll(F1), color on fl(F2)). The (3, 1, forward) row is
# stated for c2(ll(F2)) != 2.
REFERENCE_S2 = {
    (1, 1, True): ((1, 2), (1, 3)),
    (1, 1, False): ((1, 4), (1, 6)),
    (1, 3, True): ((1, 3), (1, 2)),
    (1, 3, False): ((1, 4), (1, 0)),
    (3, 1, True): ((3, 5), (3, 4)),
    (3, 1, False): ((3, 6), (3, 1)),
    (3, 3, True): ((3, 4), (3, 5)),
    (3, 3, False): ((3, 6), (3, 2)),
}


def test_criterion_3_composition():
    res, secs = _timed(composition_sweep)
    mismatched = []
    for key, want in REFERENCE_S2.items():
        e1, e2, forward = key
        row = COMPOSITION_TABLE[key] or _special_row(1)
        got = tuple((e1, phi(e2)) for phi in row)
        proper = all(is_t7_arc(a, b) if forward else is_t7_arc(b, a) for a, b in got)
        if got != want or not proper:
            mismatched.append((key, got))
    ok = res.checked == 1728 and res.ok and not mismatched and secs < 1
    report(3, ok, f"{res.checked} compositions on minimal fans, {len(res.failures)} failures; "
                  f"{len(REFERENCE_S2) - len(mismatched)}/8 table rows reproduce the reference "
                  f"s2 pairs ({secs:.3f}s, limit 1s)")


def test_criterion_4_fan_coloring():
    fans = bad = 0
    for h in enumerate_halin(5):
        for fan in extracted_fans(h):
            fans += 1
            c = color_fan(fan).colors
            if (c[fan.root] != 0 or c[fan.fl] == 0 or c[fan.ll] == 0
                    or not all(is_t7_arc(c[u], c[v]) for u, v in fan.arcs)
                    or find_violation(fan.arcs, c) is not None):
                bad += 1
    report(4, bad == 0 and fans > 0,
           f"{fans - bad}/{fans} fans from all {count_halin(5)} instances with <= 5 leaves")


def test_criterion_5_exhaustive():
    start = time.perf_counter()
    total = bad = fallbacks = 0
    first_bad = None
    for h in enumerate_halin(6):
        total += 1
        res = color_halin(h)
        fallbacks += res.fallback
        if not _colored_ok(h, res.colors):
            bad += 1
            first_bad = first_bad or to_json(h)
    secs = time.perf_counter() - start
    ok = bad == 0 and total == count_halin(6) and secs <= 600
    report(5, ok, f"{total - bad}/{total} instances with <= 6 leaves verified, "
                  f"{fallbacks} case-4 fallbacks ({secs:.0f}s, target 600s)"
                  + (f"; first failure {first_bad}" if first_bad else ""))


PROFILES = (BranchProfile(), BranchProfile(uniform_cycle=True),
            BranchProfile(0.3, 0.25, True), BranchProfile(0.8, 0.1))


def _random_run():
    out = []
    for seed in range(1000):
        h = generate_random_halin(7 + seed % 24, PROFILES[seed % len(PROFILES)], seed)
        res = color_halin(h)
        out.append((to_json(h), tuple(sorted(res.colors.items())), res.case, res.fallback))
    return out


def test_criterion_6_random():
    (first, secs) = _timed(_random_run)
    second = _random_run()
    bad = 0
    for doc, colors, _, _ in first:
        from halincolor.halin import from_json
        if not _colored_ok(from_json(doc), dict(colors)):
            bad += 1
    ok = bad == 0 and first == second and secs <= 60
    report(6, ok, f"{1000 - bad}/1000 random instances with 7-30 leaves verified, "
                  f"rerun identical: {first == second} ({secs:.1f}s, limit 60s)")


def _cycle(n):
    return OrientedGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def test_criterion_7_oracle():
    start = time.perf_counter()
    total = bad = 0
    for h in enumerate_halin(4):
        total += 1
        res = oriented_chromatic_number(h.graph)
        constructive = len(set(color_halin(h).colors.values()))
        if not (isinstance(res, OchromResult) and res.value <= 8 and res.value <= constructive
                and find_violation(h.arcs, res.witness) is None):
            bad += 1
    cycles = {n: oriented_chromatic_number(_cycle(n)).value for n in (5, 6, 7)}
    secs = time.perf_counter() - start
    ok = bad == 0 and cycles == {5: 5, 6: 3, 7: 4} and secs <= 300
    report(7, ok, f"{total - bad}/{total} instances with <= 4 leaves have chi <= min(8, constructive); "
                  f"directed C5, C6, C7 -> {cycles[5]}, {cycles[6]}, {cycles[7]} ({secs:.1f}s, limit 300s)")


def test_criterion_8_witness_search():
    leaves = int(os.environ.get("HALIN_WITNESS_LEAVES", "5"))
    rep, secs = _timed(lambda: witness_search(leaves))
    hist = ", ".join(f"{k}:{v}" for k, v in sorted(rep.histogram.items()))
    line = (f"[INFO] criterion 8 (non-gating): max chi {rep.max_chi} over {rep.instances} instances "
            f"with <= {leaves} leaves (histogram {hist}); "
            f"{'an 8-witness was found' if rep.max_chi == 8 else 'no 8-witness at this size'} ({secs:.0f}s)")
    print(line)
    ACCEPTANCE_LINES.append(line)
    # the 8-color bound itself is still enforced by the oracle
    assert rep.max_chi <= 8
