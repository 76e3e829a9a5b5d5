"""Command-line front end: exact counts, appendix-table regeneration,
conjecture scans, and the on-disk coefficient cache.

Exit codes: 0 success / scan holds; 1 usage error; 2 internal method
disagreement; 3 scan found violations (data, not a crash).
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import abacus, analytics, cache, formulas, growth
from .config import Limits
from .errors import OutOfRange, ResourceLimit, SCCoreError
from .partitions import enumerate_self_conjugate, is_t_core, partitions_of
from .reports import HOLDS, ScanReport

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREE = 2
EXIT_VIOLATIONS = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the contract here is exit 1."""

    def error(self, message):  # noqa: A003
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_range(text: str) -> range:
    """"13" -> range(13, 14); "0..27" -> range(0, 28)."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def _resolve_cache_dir(args) -> Path | None:
    if getattr(args, "cache_dir", None):
        return Path(args.cache_dir)
    env = os.environ.get("SCCORE_CACHE_DIR")
    return Path(env) if env else None


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------

_COUNT_FAMILIES = ("sc", "c", "sc_t", "c_t", "phat", "p", "nsc_t")


def _count_by_method(family: str, t: int | None, n: int, n_cap: int, method: str, args) -> int:
    limits = Limits(oracle_cap=args.oracle_cap)
    if method == "series":
        coeffs, _ = cache.load_or_compute(
            _resolve_cache_dir(args), family, t, n_cap
        )
        return coeffs[n]
    if method == "oracle":
        if family in ("sc", "sc_t"):
            items = enumerate_self_conjugate(n, limits)
            if family == "sc_t":
                items = [p for p in items if is_t_core(p, t)]
            return len(items)
        if family in ("c", "c_t"):
            return sum(1 for _ in abacus.enumerate_t_cores(n, t))
        if family == "p":
            if n > limits.oracle_cap:
                raise ResourceLimit(f"n={n} above oracle cap")
            return len(partitions_of(n))
        raise SCCoreError(f"no oracle for family {family}")
    # recursion/closed/large apply to sc_t only
    if family not in ("sc_t",):
        raise SCCoreError(f"method {method} applies to sc_t only")
    tables = formulas.RecursionTables(n)
    if method == "recursive":
        return formulas.sc_t_value(t, n, tables)
    if method == "closed":
        if t % 2 == 0:
            return formulas.sc_even_closed(t // 2, n, tables, limits)
        return formulas.sc_odd_closed((t - 1) // 2, n, tables, limits)
    if method == "large":
        return formulas.sc_large(t, n, tables).value
    raise SCCoreError(f"unknown method {method}")


def cmd_count(args) -> int:
    family = args.family
    if family not in _COUNT_FAMILIES:
        print(f"unknown family {family}", file=sys.stderr)
        return EXIT_USAGE
    family = {"c": "c_t"}.get(family, family)
    needs_t = family in ("sc_t", "c_t", "phat", "nsc_t")
    if needs_t and args.t is None:
        print("this family requires --t", file=sys.stderr)
        return EXIT_USAGE
    ns = _parse_range(args.n)
    n_cap = max(ns)
    if args.method == "all":
        methods = (
            ["series", "recursive", "closed", "large", "oracle"]
            if family == "sc_t"
            else ["series", "oracle"]
        )
    else:
        methods = [args.method]
    rows = []
    for n in ns:
        values: dict[str, int] = {}
        for method in methods:
            try:
                values[method] = _count_by_method(family, args.t, n, n_cap, method, args)
            except (OutOfRange, ResourceLimit):
                if args.method != "all":
                    raise
        if len(set(values.values())) > 1:
            print(f"method disagreement at n={n}: {values}", file=sys.stderr)
            return EXIT_DISAGREE
        if not values:
            print(f"no applicable method at n={n}", file=sys.stderr)
            return EXIT_USAGE
        rows.append((args.t if needs_t else "", n, next(iter(values.values()))))
    _emit_rows(rows, args.format, args.out)
    if args.method == "all":
        print(f"# methods agree: {', '.join(methods)}", file=sys.stderr)
    return EXIT_OK


def _emit_rows(rows, fmt: str, out: str | None) -> None:
    lines = []
    if fmt in ("csv", "tsv"):
        sep = "," if fmt == "csv" else "\t"
        lines.append(sep.join(("t", "n", "value")))
        lines.extend(sep.join(str(x) for x in row) for row in rows)
    elif fmt == "json":
        import json

        lines.append(json.dumps([[*row] for row in rows]))
    else:
        lines.extend(f"{row[1]} {row[2]}" if row[0] == "" else f"{row[0]} {row[1]} {row[2]}" for row in rows)
    text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _table_cells(kind: str, n_max: int, t_max: int) -> list[tuple[str, int, int]]:
    """(row_label, n, value) for populated cells, regenerated from recursions."""
    table = formulas.cached_sc_table(t_max + (2 if kind != "sc" else 0), n_max)
    cells: list[tuple[str, int, int]] = []
    if kind == "sc":
        for t in range(2, t_max + 1):
            for n in range(max(0, t - 2), n_max + 1):
                cells.append((str(t), n, table.value(t, n)))
    elif kind in ("sc-diff-even", "sc-diff-odd"):
        lo = 2 if kind == "sc-diff-even" else 3
        for b in range(lo, t_max - 1, 2):
            a = b + 2
            for n in range(max(0, b - 2), n_max + 1):
                cells.append((f"{a}-{b}", n, table.value(a, n) - table.value(b, n)))
    else:
        raise SCCoreError(f"unknown table kind {kind}")
    return cells


def cmd_table(args) -> int:
    t_max = args.tmax if args.tmax is not None else args.nmax + 2
    cells = _table_cells(args.kind, args.nmax, t_max)
    fmt = args.format
    lines: list[str] = []
    if fmt in ("csv", "tsv"):
        sep = "," if fmt == "csv" else "\t"
        lines.append(sep.join(("t", "n", "value")))
        lines.extend(sep.join((label, str(n), str(v))) for label, n, v in cells)
    elif fmt == "json":
        import json

        lines.append(
            json.dumps(
                {
                    "kind": args.kind,
                    "nmax": args.nmax,
                    "tmax": t_max,
                    "cells": [[label, n, v] for label, n, v in cells],
                },
                sort_keys=True,
            )
        )
    elif fmt == "md":
        labels = list(dict.fromkeys(label for label, _, _ in cells))
        by_row = {label: {} for label in labels}
        for label, n, v in cells:
            by_row[label][n] = v
        header = ["t\\n"] + [str(n) for n in range(args.nmax + 1)]
        lines.append("| " + " | ".join(header) + " |")
        lines.append("|" + "---|" * len(header))
        for label in labels:
            row = [label] + [
                str(by_row[label].get(n, "")) for n in range(args.nmax + 1)
            ]
            lines.append("| " + " | ".join(row) + " |")
    else:
        print(f"unknown format {fmt}", file=sys.stderr)
        return EXIT_USAGE
    text = "\n".join(lines) + "\n"
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

_SCANS = (
    "positivity",
    "characterization",
    "monotonicity",
    "unimodality",
    "identity",
    "inequality",
    "growth",
    "distribution",
    "simultaneous",
    "cross-validate",
)


def _run_scan(args) -> ScanReport:
    name = args.name
    if name == "positivity":
        return analytics.positivity_scan(args.t, args.nmax)
    if name == "characterization":
        return analytics.characterization_check(args.t, args.nmax)
    if name == "monotonicity":
        if args.pair is not None:
            return analytics.compare_pair(args.pair, args.nmax, args.family or "sc")
        return analytics.monotonicity_scan(args.family or "sc-even", args.nmax, args.window)
    if name == "unimodality":
        return analytics.unimodality_scan(args.family or "pi", args.nlo, args.nmax, args.ncap)
    if name == "identity":
        if args.preset:
            reports = [analytics.identity_check(s, args.nmax) for s in analytics.PRINTED_IDENTITIES]
            return _merge_reports("identity-printed", reports)
        spec = (args.t, args.a, args.b, args.a2, args.b2)
        return analytics.identity_check(spec, args.nmax)
    if name == "inequality":
        if args.preset:
            specs = {
                "conjectured": analytics.CONJECTURED_INEQUALITIES,
                "proved": analytics.PROVED_C7_INEQUALITIES,
                "all": analytics.CONJECTURED_INEQUALITIES + analytics.PROVED_C7_INEQUALITIES,
            }[args.preset if args.preset in ("conjectured", "proved") else "all"]
            return _merge_reports(
                "inequality-preset", [analytics.inequality_check(s, args.nmax) for s in specs]
            )
        spec = analytics.InequalitySpec(
            args.family or "sc", args.t, args.a, args.b,
            Fraction(args.alpha), args.nlo, strict=not args.non_strict,
        )
        return analytics.inequality_check(spec, args.nmax)
    if name == "growth":
        lo, hi = (args.range.start, args.range.stop - 1) if args.range else (19, args.nmax)
        return growth.verify_growth(lo, hi, workers=args.workers)
    if name == "distribution":
        ns = args.range if args.range else range(args.nmax, args.nmax + 1)
        witnesses = []
        rows_out = {}
        for n in ns:
            pi_ok, se_ok, so_ok = analytics.telescoping_check(n, max(ns))
            for fam, ok in (("pi", pi_ok), ("sigma_even", se_ok), ("sigma_odd", so_ok)):
                if not ok:
                    witnesses.append((0, n, fam, "sum != 1"))
            if len(ns) == 1:
                rows = analytics.distribution_table(n, max(ns))
                rows_out = {
                    fam: {str(t): v for t, v in row.values.items()}
                    for fam, row in rows.items()
                }
        rep = ScanReport(
            scan="distribution",
            params={"n_lo": min(ns), "n_hi": max(ns)},
            verdict=HOLDS if not witnesses else "fails",
            witnesses=witnesses,
            data=rows_out,
        )
        return rep.finish()
    if name == "simultaneous":
        return analytics.simultaneous_scan(args.s, args.t)
    if name == "cross-validate":
        return formulas.cross_validate(args.tmax or 12, args.nmax)
    raise SCCoreError(f"unknown scan {name}")


def _merge_reports(name: str, reports: list[ScanReport]) -> ScanReport:
    witnesses = [w for r in reports for w in r.witnesses]
    data = {f"{i}:{r.params}": r.verdict for i, r in enumerate(reports)}
    merged = ScanReport(
        scan=name,
        params={"parts": len(reports)},
        verdict=HOLDS if not witnesses else "fails",
        witnesses=witnesses,
        data={"verdicts": data},
        elapsed_ms=sum(r.elapsed_ms for r in reports),
    )
    return merged.finish()


def cmd_scan(args) -> int:
    if args.name not in _SCANS:
        print(f"unknown scan {args.name!r}; choose from {', '.join(_SCANS)}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = _run_scan(args)
    except SCCoreError as exc:
        print(f"scan error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = report.to_json()
    if args.json:
        Path(args.json).write_text(text)
    else:
        sys.stdout.write(text)
    summary = f"# {report.scan}: {report.verdict} ({len(report.witnesses)} witnesses, {report.elapsed_ms} ms)"
    print(summary, file=sys.stderr)
    return EXIT_OK if report.verdict == HOLDS else EXIT_VIOLATIONS


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------

def cmd_cache(args) -> int:
    cache_dir = _resolve_cache_dir(args) or cache.default_cache_dir()
    if args.action == "purge":
        removed = cache.purge(cache_dir)
        print(f"removed {removed} cache files")
        return EXIT_OK
    if args.action == "build":
        ts = list(_parse_range(args.t)) if args.t else [None]
        family = {"c": "c_t"}.get(args.family, args.family)
        for t in ts:
            coeffs = cache.compute_family(family, t, args.nmax).coeffs
            path = cache.write_cache(cache_dir, family, t, args.nmax, coeffs)
            print(f"wrote {path}")
        return EXIT_OK
    if args.action == "verify":
        files = sorted(Path(cache_dir).glob("*.bin"))
        if not files:
            print("no cache files")
            return EXIT_OK
        ok = True
        for f in files:
            try:
                res = cache.verify_file(f)
            except SCCoreError as exc:
                print(f"{f}: corrupt ({exc}); will recompute on next use")
                continue
            status = "ok" if res["ok"] else f"MISMATCH {res['mismatches'][:5]}"
            ok = ok and res["ok"]
            print(f"{f}: {status} (sampled {res['sampled']})")
        return EXIT_OK if ok else EXIT_DISAGREE
    print(f"unknown cache action {args.action}", file=sys.stderr)
    return EXIT_USAGE


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> _Parser:
    p = _Parser(prog="sccore", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--cache-dir", help="coefficient cache directory (env SCCORE_CACHE_DIR)")
        sp.add_argument("--oracle-cap", type=int, default=200)
        sp.add_argument("--workers", type=int, default=os.cpu_count() or 1)

    c = sub.add_parser("count", help="exact values of a counting family")
    c.add_argument("family", choices=_COUNT_FAMILIES)
    c.add_argument("--t", type=int)
    c.add_argument("--n", required=True, help="single n or range a..b")
    c.add_argument("--method", default="series",
                   choices=("series", "recursive", "closed", "large", "oracle", "all"))
    c.add_argument("--format", default="text", choices=("text", "csv", "tsv", "json"))
    c.add_argument("--out")
    common(c)
    c.set_defaults(func=cmd_count)

    t = sub.add_parser("table", help="regenerate the appendix tables")
    t.add_argument("kind", choices=("sc", "sc-diff-even", "sc-diff-odd"))
    t.add_argument("--nmax", type=int, required=True)
    t.add_argument("--tmax", type=int)
    t.add_argument("--format", default="csv", choices=("csv", "tsv", "json", "md"))
    t.add_argument("--out")
    common(t)
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("scan", help="run a verification scan, emit a JSON report")
    s.add_argument("name")
    s.add_argument("--t", type=int)
    s.add_argument("--s", type=int)
    s.add_argument("--family")
    s.add_argument("--pair", type=int, help="monotonicity: compare sc_{pair+2} vs sc_pair")
    s.add_argument("--window", default="conjecture", choices=("conjecture", "theorem"))
    s.add_argument("--nmax", type=int, default=400)
    s.add_argument("--nlo", type=int, default=0)
    s.add_argument("--ncap", type=int)
    s.add_argument("--tmax", type=int)
    s.add_argument("--range", type=_parse_range, help="a..b")
    s.add_argument("--a", type=int)
    s.add_argument("--b", type=int)
    s.add_argument("--a2", type=int)
    s.add_argument("--b2", type=int)
    s.add_argument("--alpha", help="exact rational threshold, e.g. 19/10")
    s.add_argument("--non-strict", action="store_true")
    s.add_argument("--preset", nargs="?", const="all")
    s.add_argument("--json", help="write the JSON report to this path")
    common(s)
    s.set_defaults(func=cmd_scan)

    k = sub.add_parser("cache", help="build / verify / purge the coefficient cache")
    k.add_argument("action", choices=("build", "verify", "purge"))
    k.add_argument("--family", default="sc_t", choices=_COUNT_FAMILIES)
    k.add_argument("--t", help="single t or range a..b")
    k.add_argument("--nmax", type=int, default=10000)
    common(k)
    k.set_defaults(func=cmd_cache)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SCCoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
