#!/usr/bin/env python3
"""Randomized stress test of the generalized-join spectrum engine.

Usage:
    python scripts/join_trials.py [--trials 1000] [--seed 1] [--max-host 8] [--max-order 6]

Each trial draws a random weighted host and random component graphs, predicts
the join spectrum from component spectra alone, then diagonalizes the fully
assembled graph and compares.  Reports the worst deviation seen.
"""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass
from itertools import combinations

from wzdgraph.graphcore import assemble_join
from wzdgraph.oracle import laplacian_matrix, symmetric_eigenvalues
from wzdgraph.spectra import SpectrumMultiset, WeightedHostGraph, join_spectrum


@dataclass(frozen=True)
class TrialConfig:
    trials: int = 1000
    seed: int = 1
    max_host: int = 8
    max_order: int = 6
    tol: float = 1e-8


def run(cfg: TrialConfig) -> int:
    rng = random.Random(cfg.seed)
    worst = 0.0
    worst_trial = -1
    failures = 0
    for trial in range(cfg.trials):
        k = rng.randint(1, cfg.max_host)
        orders = [rng.randint(1, cfg.max_order) for _ in range(k)]
        host_edges = {
            (i, j) for i, j in combinations(range(k), 2) if rng.random() < 0.5
        }
        host = WeightedHostGraph(
            labels=tuple(range(k)), weights=tuple(orders), edges=frozenset(host_edges)
        )
        parts = []
        for m in orders:
            edges = [(i, j) for i, j in combinations(range(m), 2) if rng.random() < 0.5]
            parts.append((m, edges))
        comps = []
        for m, edges in parts:
            g = assemble_join(set(), [(m, edges)])
            eigs = symmetric_eigenvalues(laplacian_matrix(g))
            comps.append(SpectrumMultiset.floating((e, 1) for e in eigs))
        predicted = join_spectrum(host, comps).expand()
        assembled = assemble_join(host_edges, parts)
        oracle = symmetric_eigenvalues(laplacian_matrix(assembled))
        dev = max(
            (abs(a - b) for a, b in zip(oracle, predicted)), default=0.0
        ) if len(oracle) == len(predicted) else float("inf")
        if dev > worst:
            worst, worst_trial = dev, trial
        if dev > cfg.tol:
            failures += 1
            print(f"trial {trial}: deviation {dev:.3e} host={sorted(host_edges)} "
                  f"orders={orders}")
    print(f"{cfg.trials} trials, seed {cfg.seed}: worst deviation {worst:.3e} "
          f"(trial {worst_trial}), {failures} over tol {cfg.tol:g}")
    return 1 if failures else 0


def parse_args() -> TrialConfig:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--max-host", type=int, default=8)
    ap.add_argument("--max-order", type=int, default=6)
    ap.add_argument("--tol", type=float, default=1e-8)
    args = ap.parse_args()
    return TrialConfig(trials=args.trials, seed=args.seed, max_host=args.max_host,
                       max_order=args.max_order, tol=args.tol)


if __name__ == "__main__":
    raise SystemExit(run(parse_args()))
