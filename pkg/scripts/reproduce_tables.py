#!/usr/bin/env python3
"""Regenerate the appendix-style value tables into ./out/.

Usage:
  python scripts/reproduce_tables.py [--nmax 60] [--outdir out]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from sccore.cli import main as sccore


def run() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=60)
    ap.add_argument("--outdir", default="out")
    args = ap.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(exist_ok=True)
    jobs = [
        ("sc", f"sc_t_table_n{args.nmax}.csv"),
        ("sc-diff-even", f"sc_diff_even_n{args.nmax}.csv"),
        ("sc-diff-odd", f"sc_diff_odd_n{args.nmax}.csv"),
    ]
    for kind, name in jobs:
        dest = outdir / name
        code = sccore([
            "table", kind, "--nmax", str(args.nmax), "--tmax", str(args.nmax + 2),
            "--format", "csv", "--out", str(dest),
        ])
        print(f"{kind}: wrote {dest} (exit {code})")
        md = outdir / name.replace(".csv", ".md")
        sccore([
            "table", kind, "--nmax", str(args.nmax), "--tmax", str(args.nmax + 2),
            "--format", "md", "--out", str(md),
        ])
        print(f"{kind}: wrote {md}")


if __name__ == "__main__":
    run()
