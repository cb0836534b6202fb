"""Benchmark harness: canonicalization move counts and wall time as CSV."""
from __future__ import annotations

import time
from typing import Iterable

from .generate import GenSpec, random_connected
from .planner import canonicalize

CSV_HEADER = "n,trial,moves,elapsed_ms"


def _trial_seed(seed: int, n: int, trial: int) -> int:
    # distinct, deterministic per (n, trial); constants are arbitrary odd primes
    return (seed * 1_000_003 + n * 10_007 + trial) & 0xFFFFFFFFFFFFFFFF


def stats_run(d: int, n_list: Iterable[int], trials: int, seed: int,
              style: str = "blob") -> list[tuple[int, int, int, float]]:
    """Canonicalize generated instances; rows are (n, trial, moves, elapsed_ms),
    ordered by (n, trial) and deterministic in the seed (timing aside)."""
    rows = []
    for n in n_list:
        for trial in range(trials):
            spec = GenSpec(n=n, d=d, seed=_trial_seed(seed, n, trial), style=style)
            V = random_connected(spec)
            t0 = time.perf_counter()
            trace, _chain = canonicalize(V)
            elapsed_ms = (time.perf_counter() - t0) * 1000.0
            rows.append((n, trial, len(trace.moves), elapsed_ms))
    return rows


def rows_to_csv(rows) -> str:
    lines = [CSV_HEADER]
    lines.extend(f"{n},{trial},{moves},{ms:.3f}" for n, trial, moves, ms in rows)
    return "\n".join(lines) + "\n"
