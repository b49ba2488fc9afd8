"""Batch theorem verification over exhaustive tree corpora."""

from __future__ import annotations

import time
from multiprocessing import Pool
from typing import Iterable, Optional

from .families import enumerate_trees
from .graphs import Tree, parse_graph6
from .reports import (
    SCHEMA_VERSION,
    THEOREM_CHECKS,
    build_extras,
    build_tree_record,
    compute_verdicts,
)

STRUCTURAL_N_MAX = 12


def run_verification(
    n_max: int = 10,
    k_set: tuple[int, ...] = (2, 3, 4),
    theorems: Optional[Iterable[str]] = None,
    workers: int = 1,
    cache=None,
) -> dict:
    """Compute every per-tree record up to n_max and judge the theorems."""
    if n_max > STRUCTURAL_N_MAX:
        raise ValueError(f"n_max limited to {STRUCTURAL_N_MAX}")
    names = list(theorems) if theorems is not None else list(THEOREM_CHECKS)
    started = time.perf_counter()

    trees = [t for n in range(1, n_max + 1) for t in enumerate_trees(n)]
    if workers > 1 and cache is None:
        with Pool(workers) as pool:
            records = pool.map(
                _record_worker, [(t.graph.n, tuple(t.graph.edges()), k_set) for t in trees]
            )
    else:
        records = [build_tree_record(t, k_set, cache) for t in trees]
    records.sort(key=lambda r: (r["n"], r["canonical"]))
    records_seconds = time.perf_counter() - started

    extras = build_extras(k_set, n_max)
    report = {
        "schema_version": SCHEMA_VERSION,
        "corpus": {"n_max": n_max, "k_set": sorted(set(k_set))},
        "trees": records,
        "extras": extras,
        "theorems": [],
        "timing": {},
    }
    report["theorems"] = compute_verdicts(report, names)
    report["timing"] = {
        "records_seconds": round(records_seconds, 3),
        "total_seconds": round(time.perf_counter() - started, 3),
    }
    return report


def _record_worker(args: tuple) -> dict:
    n, edges, k_set = args
    return build_tree_record(Tree.from_edges(n, list(edges)), k_set)


def scan_equality_conjecture(n_max: int, k_set: tuple[int, ...], cache=None) -> dict:
    """Scan for trees where the eternal number equals gamma_k but not gamma_{k/2}.

    Only meaningful for k > 2; callers must reject smaller k. Reports a
    definite verdict per tree inside the oracle guard rails and never claims
    anything beyond the scanned range.
    """
    from .domination import distance_domination
    from .oracle import eternal_number
    from .families import canonical_form
    from .graphs import emit_graph6
    from .reports import ORACLE_N_LIMIT

    results = []
    for k in sorted(set(k_set)):
        if k <= 2:
            raise ValueError("the equality conjecture scan applies to k > 2 only")
        limit = min(n_max, ORACLE_N_LIMIT.get(k, 9))
        scanned = 0
        counterexamples = []
        for n in range(1, limit + 1):
            for t in enumerate_trees(n):
                scanned += 1
                gk = distance_domination(t, k).value
                m = eternal_number(t.graph, k).m_min
                if m == gk:
                    half = distance_domination(t, max(1, k // 2)).value
                    if m != half:
                        counterexamples.append(
                            {
                                "canonical": canonical_form(t),
                                "graph6": emit_graph6(t.graph),
                                "detail": f"gamma_k={gk} eternal={m} gamma_half={half}",
                            }
                        )
        results.append(
            {
                "k": k,
                "n_scanned_up_to": limit,
                "trees_scanned": scanned,
                "counterexamples": counterexamples,
                "verdict": "no counterexample up to n_max"
                if not counterexamples
                else f"{len(counterexamples)} counterexamples found",
            }
        )
    return {"schema_version": SCHEMA_VERSION, "scans": results}
