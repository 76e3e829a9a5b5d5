#!/usr/bin/env python3
"""Run the full desk-scale verification battery and write JSON reports.

Every claim the engine can check mechanically gets a report under
./reports/: positivity characterizations, pairwise count comparisons,
monotonicity windows (conjectured and proved), unimodality windows,
telescoping distributions, printed identities, rational-threshold
inequalities, the growth audit, simultaneous-core certificates, and the
multi-method cross-validation grid.  Exit code 3 from a scan means
"violations found and reported", which is expected for the windows with
boundary defects; the summary table at the end shows every verdict.

Usage:
  python scripts/run_all_scans.py [--outdir reports] [--deep]

--deep raises the n ranges to the levels used by the acceptance gate
(10000 for zero sets and pair scans); the default finishes in seconds.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from sccore.cli import main as sccore


def run() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="reports")
    ap.add_argument("--deep", action="store_true")
    args = ap.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(exist_ok=True)
    big = "10000" if args.deep else "2000"
    mid = "1000" if args.deep else "400"
    jobs: list[tuple[str, list[str]]] = []
    for t in (2, 3, 4, 5, 6, 7, 8, 9, 10, 11):
        jobs.append((f"characterization_t{t}", ["scan", "characterization", "--t", str(t), "--nmax", big]))
    for pair in (4, 6, 7, 9):
        jobs.append((f"pair_sc{pair + 2}_vs_sc{pair}",
                     ["scan", "monotonicity", "--pair", str(pair), "--nmax", big]))
    for fam in ("sc-even", "sc-odd"):
        for window in ("conjecture", "theorem"):
            jobs.append((f"monotonicity_{fam}_{window}",
                         ["scan", "monotonicity", "--family", fam, "--nmax", mid,
                          "--window", window]))
    jobs.append(("monotonicity_nsc_odd", ["scan", "monotonicity", "--family", "nsc-odd", "--nmax", "500"]))
    jobs.append(("monotonicity_c_family", ["scan", "monotonicity", "--family", "c", "--nmax", "200"]))
    for fam in ("pi", "sigma_even", "sigma_odd"):
        jobs.append((f"unimodality_{fam}",
                     ["scan", "unimodality", "--family", fam, "--nmax", "400", "--ncap", "400"]))
    jobs.append(("identities", ["scan", "identity", "--preset", "--nmax", big]))
    jobs.append(("inequalities", ["scan", "inequality", "--preset", "--nmax", big]))
    jobs.append(("distribution", ["scan", "distribution", "--range", "3..400"]))
    jobs.append(("growth", ["scan", "growth", "--range", "19..150"]))
    for s, t in ((2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)):
        jobs.append((f"simultaneous_{s}_{t}", ["scan", "simultaneous", "--s", str(s), "--t", str(t)]))
    jobs.append(("cross_validate", ["scan", "cross-validate", "--tmax", "20", "--nmax", "100"]))

    summary = []
    for name, argv in jobs:
        dest = outdir / f"{name}.json"
        code = sccore([*argv, "--json", str(dest)])
        rep = json.loads(dest.read_text())
        summary.append((name, rep["verdict"], len(rep["witnesses"]), code))
    width = max(len(n) for n, *_ in summary)
    print(f"\n{'scan'.ljust(width)}  verdict  witnesses  exit")
    for name, verdict, wit, code in summary:
        print(f"{name.ljust(width)}  {verdict:7}  {wit:9d}  {code}")


if __name__ == "__main__":
    run()
