"""Command-line interface: ``halincolor <command> [flags]``.

JSON goes to standard output and diagnostics to standard error. Exit codes:
0 success, 1 domain failure (invalid instance, failed verification),
2 usage error or unreadable file.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Iterator

from .checks import automorphism_sweep, composition_sweep, reversal_sweep, table_sweep
from .colorer import color_halin
from .graph import ColoringError, verify_oriented_coloring
from .halin import BranchProfile, HalinError, OrientedHalin, from_dict, generate_random_halin, to_dict, to_dot
from .oracle import AboveKmax, BudgetExceeded, SearchReport, oriented_chromatic_number, search_records

__all__ = ["main", "run"]

SEED_MAX = 2 ** 64 - 1
ROTATION_NOTE = ("plane trees are not deduplicated under rotation of the root's children, "
                 "so isomorphic instances may be counted more than once")


class UsageError(Exception):
    """Bad flags or an unreadable file (exit 2)."""


class DomainError(Exception):
    """Invalid input data (exit 1)."""


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise UsageError(f"cannot read {path}: {e}") from None


def read_records(path: str) -> list:
    """One JSON document, or a JSON-lines stream of them."""
    text = _read_text(path)
    if not text.strip():
        raise DomainError(f"{path}: no records")
    try:
        return [json.loads(text)]
    except json.JSONDecodeError:
        pass
    out = []
    for no, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            try:
                out.append(json.loads(line))
            except json.JSONDecodeError as e:
                raise DomainError(f"{path}:{no}: invalid JSON: {e.msg}") from None
    return out


def _instance(rec) -> OrientedHalin:
    doc = rec["instance"] if isinstance(rec, dict) and "instance" in rec else rec
    return from_dict(doc)


def _coloring(rec, n: int) -> dict[int, int]:
    col = rec.get("coloring") if isinstance(rec, dict) else rec
    if isinstance(col, list):
        return dict(enumerate(col))
    if isinstance(col, dict):
        try:
            return {int(k): v for k, v in col.items()}
        except ValueError:
            pass
    raise DomainError("coloring must be a list of colors or an object keyed by vertex id")


def _instances(path: str) -> Iterator[tuple[int, OrientedHalin | None, object]]:
    for i, rec in enumerate(read_records(path)):
        try:
            yield i, _instance(rec), rec
        except (HalinError, ValueError, TypeError, KeyError) as e:
            print(f"record {i}: invalid instance: {e}", file=sys.stderr)
            yield i, None, rec


def _colors_list(colors, n: int) -> list[int]:
    return [colors[v] for v in range(n)]


# --------------------------------------------------------------------------
# commands


def cmd_generate(args) -> int:
    if args.leaves < 3:
        raise UsageError("--leaves must be at least 3")
    if not 0 <= args.seed <= SEED_MAX:
        raise UsageError("--seed must be a 64-bit unsigned integer")
    if args.count < 1:
        raise UsageError("--count must be positive")
    profile = BranchProfile(args.split, args.subdivide, args.uniform_cycle)
    for i in range(args.count):
        _emit(to_dict(generate_random_halin(args.leaves, profile, (args.seed + i) & SEED_MAX)))
    return 0


def cmd_color(args) -> int:
    status = 0
    dots = []
    for i, h, _ in _instances(args.input):
        if h is None:
            status = 1
            continue
        res = color_halin(h)
        colors = _colors_list(res.colors, h.n)
        _emit({"instance": to_dict(h), "coloring": colors, "case": res.case.value,
               "colors_used": len(set(colors)), "fallback": res.fallback})
        if res.fallback:
            print(f"record {i}: fallback repair used", file=sys.stderr)
        dots.append(to_dot(h, res.colors))
    if args.emit_dot:
        _write(args.emit_dot, "".join(dots))
    return status


def cmd_verify(args) -> int:
    recs = list(_instances(args.input))
    if args.coloring:
        cols = read_records(args.coloring)
        if len(cols) != len(recs):
            raise DomainError(f"{len(recs)} instances but {len(cols)} colorings")
    else:
        cols = [rec for _, _, rec in recs]
    status = 0
    for (i, h, _), crec in zip(recs, cols):
        if h is None:
            status = 1
            continue
        try:
            v = verify_oriented_coloring(h.graph, _coloring(crec, h.n))
        except (ColoringError, DomainError, TypeError) as e:
            _emit({"record": i, "valid": False, "error": str(e)})
            print(f"record {i}: {e}", file=sys.stderr)
            status = 1
            continue
        if v is None:
            _emit({"record": i, "valid": True})
        else:
            _emit({"record": i, "valid": False, "violation": v.to_dict()})
            print(f"record {i}: {v}", file=sys.stderr)
            status = 1
    return status


def cmd_ochrom(args) -> int:
    if args.kmax < 1:
        raise UsageError("--kmax must be positive")
    status = 0
    for i, h, _ in _instances(args.input):
        if h is None:
            status = 1
            continue
        try:
            res = oriented_chromatic_number(h.graph, args.kmax, args.budget)
        except BudgetExceeded as e:
            _emit({"record": i, "status": "budget", "chi": None, "nodes": e.nodes})
            continue
        if isinstance(res, AboveKmax):
            _emit({"record": i, "status": "above_kmax", "chi": None, "kmax": res.kmax, "nodes": res.nodes})
        else:
            _emit({"record": i, "status": "ok", "chi": res.value,
                   "witness": _colors_list(res.witness, h.n), "nodes": res.nodes})
    return status


def cmd_search(args) -> int:
    if args.max_leaves < 3:
        raise UsageError("--max-leaves must be at least 3")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    report = SearchReport()
    for rec in search_records(args.max_leaves, args.budget, random_count=args.random,
                              seed=args.seed, jobs=args.jobs, timing=not args.no_timing):
        report.add(rec)
        if not args.summary_only:
            _emit(rec)
    summary = report.summary()
    summary["note"] = ROTATION_NOTE
    _emit(summary)
    print(f"{report.instances} instances, max chi {report.max_chi}, "
          f"{report.exhausted} over budget", file=sys.stderr)
    return 0


def cmd_export(args) -> int:
    recs = list(_instances(args.input))
    cols = read_records(args.coloring) if args.coloring else None
    if cols is not None and len(cols) != len(recs):
        raise DomainError(f"{len(recs)} instances but {len(cols)} colorings")
    out = []
    for j, (i, h, _) in enumerate(recs):
        if h is None:
            return 1
        coloring = _coloring(cols[j], h.n) if cols is not None else None
        out.append(to_dot(h, coloring))
    _write(args.dot, "".join(out))
    return 0


def cmd_selftest(args) -> int:
    good, bad = automorphism_sweep()
    table = table_sweep()
    comp = composition_sweep()
    result = {
        "automorphisms_verified": good.checked - len(good.failures),
        "non_automorphisms_rejected": bad.checked - len(bad.failures),
        "table_rows_verified": table.checked - len(table.failures),
        "compositions_verified": comp.checked - len(comp.failures),
    }
    sweeps = [good, bad, table, comp]
    if args.reversal:
        rev = reversal_sweep()
        result["reversals_verified"] = rev.checked - len(rev.failures)
        sweeps.append(rev)
    ok = all(s.ok for s in sweeps)
    result["ok"] = ok
    _emit(result)
    print(f"{result['automorphisms_verified']} automorphisms verified", file=sys.stderr)
    print(f"{result['compositions_verified']} compositions verified", file=sys.stderr)
    for s in sweeps:
        for f in s.failures[:10]:
            print(f"failure: {f}", file=sys.stderr)
    return 0 if ok else 1


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e}") from None


# --------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="halincolor", description="Oriented 8-coloring of Halin graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="emit random instances as JSON lines")
    g.add_argument("--leaves", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--split", type=float, default=0.5, help="probability of splitting a leaf")
    g.add_argument("--subdivide", type=float, default=0.0, help="probability of subdividing an edge")
    g.add_argument("--uniform-cycle", action="store_true", help="orient the cycle along the leaf order")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("color", help="color instances with at most 8 colors")
    c.add_argument("--in", dest="input", required=True, help="instance file, or - for stdin")
    c.add_argument("--emit-dot", metavar="FILE")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check oriented colorings")
    v.add_argument("--in", dest="input", required=True)
    v.add_argument("--coloring", metavar="FILE",
                   help="colorings, one per instance; default: the 'coloring' field of each record")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("ochrom", help="exact oriented chromatic number")
    o.add_argument("--in", dest="input", required=True)
    o.add_argument("--kmax", type=int, default=8)
    o.add_argument("--budget", type=int, default=None, help="search-node limit")
    o.set_defaults(func=cmd_ochrom)

    s = sub.add_parser("search", help="exact chromatic numbers over enumerated instances")
    s.add_argument("--max-leaves", type=int, required=True)
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--random", type=int, default=0, help="extra random instances with 7-10 leaves")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--no-timing", action="store_true")
    s.add_argument("--summary-only", action="store_true")
    s.set_defaults(func=cmd_search)

    e = sub.add_parser("export", help="write Graphviz DOT")
    e.add_argument("--in", dest="input", required=True)
    e.add_argument("--dot", required=True)
    e.add_argument("--coloring", metavar="FILE")
    e.set_defaults(func=cmd_export)

    t = sub.add_parser("selftest", help="exhaustive checks of the T7 machinery")
    t.add_argument("--reversal", action="store_true", help="also run the reversal sweep (slow)")
    t.set_defaults(func=cmd_selftest)
    return p


def run(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(e, file=sys.stderr)
        return 2
    except DomainError as e:
        print(e, file=sys.stderr)
        return 1
    except SystemExit as e:  # --help
        return e.code if isinstance(e.code, int) else 0
    except BrokenPipeError:
        return 0


def main() -> None:
    sys.exit(run())
