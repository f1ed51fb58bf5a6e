"""Command-line front end: ``sombor {compute,construct,enumerate,minimize,verify,transform}``.

Exit codes: 0 success, 1 input or I/O failure, 2 bad arguments or
infeasible parameters, 3 an internal-consistency check failed. Formula
mismatches are reported inside the output and never change the exit code.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from collections.abc import Sequence
from pathlib import Path

from . import graph6
from .enumeration import MAX_TREE_N, MAX_UNICYCLIC_N, count, enumerate_class
from .extremal import (
    ExtremalParams,
    Family,
    Variant,
    build,
    closed_form_tree,
    closed_form_unicyclic,
    tree_regime,
    unicyclic_regime,
)
from .graph import GraphClass, classify, max_degree
from .index import DESCRIPTORS, get_descriptor, index_value
from .transforms import SiteError, apply, find_sites, predicted_delta
from .verifier import (
    COROLLARY_COLUMNS,
    CSV_COLUMNS,
    adjudicate_coefficient,
    brute_force_min,
    corollary_csv_row,
    fmt,
    verify_claims,
    verify_corollaries,
    verify_lemma_2_2,
    verify_theorem_1_1,
    verify_theorem_1_2,
)

CAPS = {GraphClass.TREE: (1, MAX_TREE_N), GraphClass.UNICYCLIC: (3, MAX_UNICYCLIC_N)}

TARGETS = {
    # target: (classes scanned, default n range)
    "thm1.1": ((GraphClass.TREE,), (7, 12)),
    "thm1.2": ((GraphClass.UNICYCLIC,), (5, 12)),
    "cor1.1": ((GraphClass.TREE,), (7, 14)),
    "cor1.2": ((GraphClass.UNICYCLIC,), (5, 12)),
    "lemma2.2": ((GraphClass.TREE, GraphClass.UNICYCLIC), (4, 10)),
    "claims": ((GraphClass.TREE, GraphClass.UNICYCLIC), (5, 12)),
}


class UsageError(Exception):
    """Arguments parse but describe an infeasible request (exit 2)."""


def _n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi) if sep else int(lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _legs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _check_cap(cls: GraphClass, n: int) -> None:
    lo, hi = CAPS[cls]
    if not lo <= n <= hi:
        raise UsageError(f"{cls.value} n={n} outside supported range {lo}..{hi}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _open_input(path: str):
    return sys.stdin.buffer if path == "-" else open(path, "rb")


# Commands -------------------------------------------------------------------


def cmd_compute(args: argparse.Namespace) -> int:
    d = get_descriptor(args.index)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    try:
        stream = _open_input(args.input)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        for lineno, g in graph6.read_lines(stream):
            writer.writerow([lineno, g.n, g.m, max_degree(g), fmt(index_value(g, d))])
    except graph6.Graph6Error as exc:
        sys.stdout.write(out.getvalue())
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        if stream is not sys.stdin.buffer:
            stream.close()
    sys.stdout.write(out.getvalue())
    return 0


def _closed_forms(cls: GraphClass, n: int, delta: int) -> dict:
    if not 3 <= delta <= n - 2:
        return {}
    if cls is GraphClass.TREE:
        cf = closed_form_tree(n, delta)
        return {"regime": tree_regime(n, delta).value, "closed_form": cf.value}
    return {
        "regime": unicyclic_regime(n, delta).value,
        "closed_form_as_printed": closed_form_unicyclic(n, delta, Variant.AS_PRINTED).value,
        "closed_form_as_constructed": closed_form_unicyclic(n, delta, Variant.AS_CONSTRUCTED).value,
    }


def cmd_construct(args: argparse.Namespace) -> int:
    params = ExtremalParams(args.family, args.n, args.delta, args.legs, args.cycle)
    try:
        g = build(params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cls = classify(g)
    d = max_degree(g)
    summary = {
        "family": params.family.value,
        "class": cls.value,
        "n": g.n,
        "m": g.m,
        "delta": d,
        "graph6": graph6.encode(g).decode(),
        "sombor": index_value(g),
    }
    summary.update(_closed_forms(cls, g.n, d))
    sys.stdout.write(summary["graph6"] + "\n")
    sys.stdout.write(_dump(summary))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    cls = GraphClass(args.cls)
    _check_cap(cls, args.n)
    if args.count:
        print(count(cls, args.n, args.delta))
        return 0
    graph6.write_lines(sys.stdout.buffer, enumerate_class(cls, args.n, args.delta))
    sys.stdout.flush()
    return 0


def cmd_minimize(args: argparse.Namespace) -> int:
    cls = GraphClass(args.cls)
    _check_cap(cls, args.n)
    d = get_descriptor(args.index)
    t0 = time.perf_counter()
    res = brute_force_min(cls, args.n, args.delta, d, jobs=args.jobs)
    report = {
        "class": cls.value,
        "n": args.n,
        "delta": args.delta,
        "index": d.name,
        "class_size": res.class_size,
        "empty": res.empty,
        "min_value": res.min_value,
        "min_text": fmt(res.min_value),
        "witness_count": len(res.codes),
        "witnesses_g6": [c.decode() for c in res.codes],
        "warnings": res.warnings,
    }
    if d.name == "sombor":
        report.update(_closed_forms(cls, args.n, args.delta))
    if not args.no_timing:
        report["runtime_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    sys.stdout.write(_dump(report))
    return 0


def _write_csv(path: Path, header: Sequence[str], rows: list[list[str]]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def cmd_verify(args: argparse.Namespace) -> int:
    classes, default = TARGETS[args.target]
    lo, hi = args.n or default
    for cls in classes:
        _check_cap(cls, hi)
        if len(classes) == 1:
            _check_cap(cls, lo)
    if args.target == "cor1.1" and lo < 7 or args.target == "cor1.2" and lo < 5:
        raise UsageError(f"{args.target} needs n >= {7 if args.target == 'cor1.1' else 5}")
    ns = range(lo, hi + 1)
    doc: dict = {"target": args.target, "n_range": [lo, hi]}
    if args.target in ("thm1.1", "thm1.2"):
        fn = verify_theorem_1_1 if args.target == "thm1.1" else verify_theorem_1_2
        reports = fn(ns, jobs=args.jobs)
        if args.no_timing:
            for r in reports:
                r.runtime_ms = None
        consistent = all(r.consistent for r in reports)
        if args.target == "thm1.2":
            doc["adjudicated_coefficient"] = adjudicate_coefficient(reports)
        doc["reports"] = [r.to_dict() for r in reports]
        header, rows = CSV_COLUMNS, [r.csv_row() for r in reports]
        summary = f"{len(reports)} reports, {sum(r.matches_printed for r in reports)} match printed, " \
                  f"{sum(r.matches_constructed for r in reports)} match constructed"
    elif args.target in ("cor1.1", "cor1.2"):
        tree = ns if args.target == "cor1.1" else range(0)
        uni = ns if args.target == "cor1.2" else range(0)
        reports = verify_corollaries(tree, uni, jobs=args.jobs)
        consistent = all(r.consistent for r in reports)
        doc["reports"] = [r.to_dict() for r in reports]
        header, rows = COROLLARY_COLUMNS, [corollary_csv_row(r) for r in reports]
        summary = f"{len(reports)} reports, {sum(r.flagged for r in reports)} flagged"
    elif args.target == "lemma2.2":
        reports = verify_lemma_2_2(ns, range(max(lo, 3), hi + 1))
        consistent = all(r.consistent for r in reports)
        doc["holds"] = all(r.holds for r in reports)
        doc["reports"] = [r.to_dict() for r in reports]
        header = ("class", "n", "graphs", "sites", "failures", "max_prediction_error", "max_delta")
        rows = [
            [r.cls, str(r.n), str(r.graphs), str(r.sites), str(len(r.failures)),
             f"{r.max_prediction_error:.3e}", fmt(r.max_delta)]
            for r in reports
        ]
        summary = f"{sum(r.sites for r in reports)} sites, {sum(len(r.failures) for r in reports)} failures"
    else:
        reports = []
        for cls in classes:
            reports += verify_claims(cls, range(max(lo, CAPS[cls][0]), hi + 1), jobs=args.jobs)
        consistent = all(r.consistent for r in reports)
        doc["all_hold"] = all(r.all_hold for r in reports)
        doc["reports"] = [r.to_dict() for r in reports]
        header = ("class", "n", "delta", "regime", "witness_count", "all_hold")
        rows = [
            [r.cls, str(r.n), str(r.delta), r.regime, str(len(r.witnesses)), str(r.all_hold).lower()]
            for r in reports
        ]
        summary = f"{len(reports)} cases, {sum(r.all_hold for r in reports)} with every claim holding"
    doc["consistent"] = consistent
    out = Path(args.out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{args.target}.json").write_text(_dump(doc), encoding="utf-8")
        _write_csv(out / f"{args.target}.csv", header, rows)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"{args.target}: {summary}; consistent={str(consistent).lower()}")
    return 0 if consistent else 3


def cmd_transform(args: argparse.Namespace) -> int:
    try:
        g = graph6.decode(args.graph)
    except graph6.Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sites = find_sites(g)
    if args.apply is None:
        listing = [
            {
                "index": i,
                "kind": s.kind.value,
                "case": s.case,
                "x0": s.x0,
                "x1": s.x1,
                "w0": s.w0,
                "wk": s.wk,
                "h": s.h,
                "k": s.k,
                "preserves_delta": s.preserves_delta,
                "predicted_delta": predicted_delta(g, s),
            }
            for i, s in enumerate(sites)
        ]
        sys.stdout.write(_dump(listing))
        return 0
    if not 0 <= args.apply < len(sites):
        raise UsageError(f"site index {args.apply} out of range; graph has {len(sites)} sites")
    site = sites[args.apply]
    try:
        h = apply(g, site)
    except SiteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(graph6.encode(h).decode() + "\n")
    sys.stdout.write(_dump({
        "before": index_value(g),
        "after": index_value(h),
        "delta": index_value(h) - index_value(g),
        "predicted_delta": predicted_delta(g, site),
        "max_degree_after": max_degree(h),
    }))
    return 0


# Parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sombor", description="Sombor index tools for trees and unicyclic graphs.")
    sub = p.add_subparsers(dest="command", required=True)
    classes = [GraphClass.TREE.value, GraphClass.UNICYCLIC.value]

    c = sub.add_parser("compute", help="score graph6 lines as CSV")
    c.add_argument("input", nargs="?", default="-", help="graph6 file, '-' for stdin")
    c.add_argument("--index", default="sombor", choices=sorted(DESCRIPTORS))
    c.set_defaults(func=cmd_compute)

    c = sub.add_parser("construct", help="build an extremal graph")
    c.add_argument("--family", required=True, choices=[f.value for f in Family])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--delta", type=int)
    c.add_argument("--legs", type=_legs)
    c.add_argument("--cycle", type=int)
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("enumerate", help="stream a class as graph6")
    c.add_argument("--class", dest="cls", required=True, choices=classes)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--delta", type=int)
    c.add_argument("--count", action="store_true")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("minimize", help="brute-force minimum over a class")
    c.add_argument("--class", dest="cls", required=True, choices=classes)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--delta", type=int, required=True)
    c.add_argument("--index", default="sombor", choices=sorted(DESCRIPTORS))
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--no-timing", action="store_true")
    c.set_defaults(func=cmd_minimize)

    c = sub.add_parser("verify", help="write JSON and CSV verification reports")
    c.add_argument("--target", required=True, choices=list(TARGETS))
    c.add_argument("--n", type=_n_range, help="N or A..B")
    c.add_argument("--out-dir", default="reports")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--no-timing", action="store_true")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("transform", help="list or apply relocation sites")
    c.add_argument("--graph", required=True, help="graph6 string")
    c.add_argument("--apply", type=int, metavar="INDEX")
    c.set_defaults(func=cmd_transform)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
