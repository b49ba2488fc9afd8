"""Timing harness for the linear-time solver on random trees.

Trees come from seeded uniform random attachment (vertex i picks a uniform
parent among 0..i-1), which is linear to generate and fully reproducible;
the claim under test is about the solver, not the tree distribution.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .errors import GuardRailError
from .eternal import eternal2_linear
from .graphs import Tree

MAX_BENCH_N = 10_000_000


def random_attachment_tree(n: int, seed: int) -> Tree:
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return Tree.from_edges(n, edges)


@dataclass(frozen=True)
class BenchRow:
    n: int
    trials: int
    mean_seconds: float
    ns_per_vertex: float


def run_bench(sizes: list[int], trials: int, seed: int) -> list[BenchRow]:
    for n in sizes:
        if n > MAX_BENCH_N:
            raise GuardRailError(f"bench limited to n <= {MAX_BENCH_N}, got {n}")
    rows = []
    if trials <= 0:
        return rows
    for n in sizes:
        total = 0.0
        for trial in range(trials):
            tree = random_attachment_tree(n, _derive_seed(seed, n, trial))
            t0 = time.perf_counter()
            eternal2_linear(tree, 0)
            total += time.perf_counter() - t0
        mean = total / trials
        rows.append(BenchRow(n, trials, mean, mean / n * 1e9))
    return rows


def _derive_seed(seed: int, n: int, trial: int) -> int:
    # stable 64-bit mix so each (size, trial) pair gets its own stream
    x = (seed * 0x9E3779B97F4A7C15 + n * 0xBF58476D1CE4E5B9 + trial * 0x94D049BB133111EB)
    return x % (1 << 64)


def bench_csv(rows: list[BenchRow]) -> str:
    lines = ["n,trials,mean_seconds,ns_per_vertex"]
    for r in rows:
        lines.append(f"{r.n},{r.trials},{r.mean_seconds:.6f},{r.ns_per_vertex:.2f}")
    return "\n".join(lines) + "\n"
