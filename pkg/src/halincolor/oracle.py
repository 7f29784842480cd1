"""Exact oriented chromatic number by backtracking over color classes.

A graph has an oriented k-coloring iff its vertices split into at most k
classes whose quotient is itself an oriented graph, so the search assigns
classes directly instead of enumerating target tournaments.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable, Iterator

from .graph import OrientedGraph, find_violation
from .halin import OrientedHalin, enumerate_halin, generate_random_halin, to_dict, to_json

__all__ = [
    "AboveKmax",
    "BudgetExceeded",
    "OchromResult",
    "SearchReport",
    "exists_k_coloring",
    "oriented_chromatic_number",
    "search_records",
    "witness_search",
]

COLOR_BOUND = 8


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class OchromResult:
    value: int
    witness: dict[int, int]
    nodes: int


@dataclass(frozen=True)
class AboveKmax:
    kmax: int
    nodes: int


class _Search:
    def __init__(self, g: OrientedGraph, budget: int | None):
        self.g = g
        self.budget = budget
        self.nodes = 0
        n = g.n
        self.order = sorted(range(n), key=lambda v: (-g.degree(v), v))
        pos = {v: i for i, v in enumerate(self.order)}
        # for each vertex: earlier neighbours and whether the arc leaves v
        self.earlier = []
        for v in self.order:
            nb = [(w, True) for w in g.out_neighbors[v] if pos[w] < pos[v]]
            nb += [(w, False) for w in g.in_neighbors[v] if pos[w] < pos[v]]
            self.earlier.append(nb)

    def run(self, k: int) -> dict[int, int] | None:
        n = self.g.n
        col = [-1] * n
        cnt = [[0] * k for _ in range(k)]  # cnt[a][b]: arcs from class a to class b
        order, earlier = self.order, self.earlier

        def place(i: int, used: int) -> bool:
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                raise BudgetExceeded(self.nodes)
            if i == n:
                return True
            v = order[i]
            for c in range(min(used + 1, k)):
                done = []
                ok = True
                for w, out in earlier[i]:
                    cw = col[w]
                    a, b = (c, cw) if out else (cw, c)
                    if cw == c or cnt[b][a]:
                        ok = False
                        break
                    cnt[a][b] += 1
                    done.append((a, b))
                if ok:
                    col[v] = c
                    if place(i + 1, max(used, c + 1)):
                        return True
                    col[v] = -1
                for a, b in done:
                    cnt[a][b] -= 1
            return False

        if place(0, 0):
            return {v: col[v] for v in range(n)}
        return None


def exists_k_coloring(g: OrientedGraph, k: int, budget: int | None = None) -> dict[int, int] | None:
    """An oriented coloring of ``g`` into ``0..k-1``, or None if none exists.

    Raises BudgetExceeded after ``budget`` search nodes.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return _Search(g, budget).run(k)


def oriented_chromatic_number(g: OrientedGraph, kmax: int = COLOR_BOUND,
                              budget: int | None = None) -> OchromResult | AboveKmax:
    search = _Search(g, budget)
    for k in range(1, kmax + 1):
        found = search.run(k)
        if found is not None:
            if find_violation(g.arcs, found) is not None:
                raise AssertionError(f"oracle produced an invalid coloring {found}")
            return OchromResult(k, found, search.nodes)
    return AboveKmax(kmax, search.nodes)


# --------------------------------------------------------------------------
# witness search


def _record(h: OrientedHalin, budget: int | None, timing: bool) -> dict:
    start = time.perf_counter()
    try:
        res = oriented_chromatic_number(h.graph, COLOR_BOUND, budget)
    except BudgetExceeded as e:
        rec = {"instance": to_dict(h), "chi": None, "nodes": e.nodes, "status": "budget"}
    else:
        if isinstance(res, AboveKmax):
            raise AssertionError(f"Halin instance needs more than 8 colors: {to_json(h)}")
        rec = {"instance": to_dict(h), "chi": res.value, "nodes": res.nodes, "status": "ok"}
    if timing:
        rec["time"] = round(time.perf_counter() - start, 6)
    return rec


def _record_star(args):
    return _record(*args)


def _instances(max_leaves: int, random_count: int, random_leaves: tuple[int, int],
               seed: int) -> Iterator[OrientedHalin]:
    yield from enumerate_halin(max_leaves)
    lo, hi = random_leaves
    for i in range(random_count):
        yield generate_random_halin(lo + (seed + i) % (hi - lo + 1), seed=seed + i)


def search_records(max_leaves: int, budget: int | None = None, *, random_count: int = 0,
                   random_leaves: tuple[int, int] = (7, 10), seed: int = 0,
                   jobs: int = 1, timing: bool = True) -> Iterator[dict]:
    """One record ``{instance, chi, nodes, status[, time]}`` per instance, in a
    fixed order regardless of ``jobs``."""
    work = ((h, budget, timing) for h in _instances(max_leaves, random_count, random_leaves, seed))
    if jobs <= 1:
        yield from map(_record_star, work)
        return
    with Pool(jobs) as pool:
        yield from pool.imap(_record_star, work, chunksize=64)


@dataclass
class SearchReport:
    instances: int = 0
    exhausted: int = 0
    max_chi: int = 0
    histogram: Counter = field(default_factory=Counter)
    witness: dict | None = None
    witness_count: int = 0

    def add(self, rec: dict) -> None:
        self.instances += 1
        chi = rec["chi"]
        if chi is None:
            self.exhausted += 1
            return
        self.histogram[chi] += 1
        key = json_key(rec["instance"])
        if chi > self.max_chi:
            self.max_chi, self.witness, self.witness_count = chi, rec["instance"], 1
        elif chi == self.max_chi:
            self.witness_count += 1
            if key < json_key(self.witness):
                self.witness = rec["instance"]

    def summary(self) -> dict:
        return {
            "summary": True,
            "instances": self.instances,
            "budget_exhausted": self.exhausted,
            "max_chi": self.max_chi,
            "histogram": {str(k): self.histogram[k] for k in sorted(self.histogram)},
            "witness_count": self.witness_count,
            "witness": self.witness,
        }


def json_key(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def witness_search(max_leaves: int, budget: int | None = None, **kwargs) -> SearchReport:
    """Largest exact oriented chromatic number over enumerated Halin instances.

    Keyword arguments are passed to :func:`search_records`. The reported
    witness is the lexicographically smallest instance document attaining the
    maximum, so the report does not depend on processing order.
    """
    kwargs.setdefault("timing", False)
    report = SearchReport()
    for rec in search_records(max_leaves, budget, **kwargs):
        report.add(rec)
    return report


def chromatic_numbers(graphs: Iterable[OrientedGraph], kmax: int = COLOR_BOUND) -> list[int | None]:
    out = []
    for g in graphs:
        res = oriented_chromatic_number(g, kmax)
        out.append(res.value if isinstance(res, OchromResult) else None)
    return out
