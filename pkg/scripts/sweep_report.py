#!/usr/bin/env python3
"""Sweep a range of n, verify every value, and report timing statistics.

Usage:
    python scripts/sweep_report.py [--lo 4] [--hi 200] [--max-order 256] [--csv out.csv]

Prints one line per failed n (none expected), then a timing/size summary.
With --csv, also writes the per-n summary table rows.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from wzdgraph.cli import _table_row
from wzdgraph.numtheory import is_prime
from wzdgraph.oracle import verify_spectrum


@dataclass(frozen=True)
class SweepConfig:
    lo: int = 4
    hi: int = 200
    max_order: int = 256
    csv_path: str | None = None


def run(cfg: SweepConfig) -> int:
    rows = []
    failures = []
    slowest: list[tuple[float, int]] = []
    t_start = time.perf_counter()
    for n in range(cfg.lo, cfg.hi + 1):
        t0 = time.perf_counter()
        rep = verify_spectrum(n, order_cap=cfg.max_order)
        dt = time.perf_counter() - t0
        slowest.append((dt, n))
        if rep.status == "FAIL":
            failures.append(n)
            print(f"FAIL n={n}: {rep.checks}")
        rows.append(_table_row(n))
    total = time.perf_counter() - t_start

    checked = cfg.hi - cfg.lo + 1
    primes = sum(1 for n in range(cfg.lo, cfg.hi + 1) if is_prime(n))
    biggest = max(rows, key=lambda r: r["vertices"])
    print(f"range {cfg.lo}..{cfg.hi}: {checked} values, {primes} primes skipped as degenerate")
    print(f"largest graph: n={biggest['n']} with {biggest['vertices']} vertices, "
          f"{biggest['edges']} edges")
    print(f"total {total:.1f}s; slowest n: "
          + ", ".join(f"{n} ({dt:.2f}s)" for dt, n in sorted(slowest, reverse=True)[:5]))
    print(f"failures: {len(failures)}")

    if cfg.csv_path:
        with open(cfg.csv_path, "w", encoding="utf-8") as fh:
            for r in rows:
                mu = "" if r["algebraic_connectivity"] is None else r["algebraic_connectivity"]
                lam = "" if r["spectral_radius"] is None else r["spectral_radius"]
                fh.write(
                    f"{r['n']},{r['vertices']},{r['edges']},"
                    + "|".join(map(str, r["eigenvalues"]))
                    + ","
                    + "|".join(map(str, r["multiplicities"]))
                    + f",{mu},{lam},{'true' if r['integral'] else 'false'}\n"
                )
        print(f"wrote {len(rows)} rows to {cfg.csv_path}")
    return 1 if failures else 0


def parse_args() -> SweepConfig:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=4)
    ap.add_argument("--hi", type=int, default=200)
    ap.add_argument("--max-order", type=int, default=256)
    ap.add_argument("--csv", dest="csv_path", default=None)
    args = ap.parse_args()
    if args.lo < 2 or args.hi < args.lo:
        ap.error("need 2 <= lo <= hi")
    return SweepConfig(lo=args.lo, hi=args.hi, max_order=args.max_order,
                       csv_path=args.csv_path)


if __name__ == "__main__":
    raise SystemExit(run(parse_args()))
