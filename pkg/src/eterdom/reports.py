"""Verification records, theorem verdicts, and report serialization.

A report is a plain JSON-able dict: per-tree records over an exhaustive
corpus, extra records for the named families, and one verdict per theorem.
Verdicts are pure functions of the records, so a reloaded report can be
re-validated without recomputing anything expensive.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Callable, Iterable, Optional

from .domination import (
    delete_leaf,
    distance_domination,
    distance_domination_brute,
)
from .eternal import eternal2_linear, eternal2_reduction, is_critical
from .families import (
    canonical_form,
    enumerate_trees,
    gen_pendant_paths,
    gen_regular_balls,
    gen_spider,
    recognize_critical,
    recognize_distance2_tight,
    recognize_domination_tight,
)
from .graphs import Tree, emit_graph6, leaf_ranks, tree_diameter
from .oracle import eternal_number

SCHEMA_VERSION = 1

# Free-tree counts for n = 1..10; the enumerator must reproduce these.
EXPECTED_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]

# Orders up to which the exhaustive game oracle is consulted, per distance.
ORACLE_N_LIMIT = {1: 10, 2: 10, 3: 9, 4: 9}
POWER_IDENTITY_N_LIMIT = 8


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def build_tree_record(t: Tree, k_set: tuple[int, ...], cache=None) -> dict:
    """All per-tree data the theorem suite consumes, JSON-able."""
    n = t.n
    canon = canonical_form(t)
    gamma = distance_domination(t, 1).value
    gamma2 = distance_domination(t, 2).value
    gamma_k = {str(k): distance_domination(t, k).value for k in sorted({1, 2, 3, 4} | set(k_set))}
    linear, _ = eternal2_linear(t, 0)
    reduction = eternal2_reduction(t).total
    root_independent = all(eternal2_linear(t, r)[0] == linear for r in range(n))

    oracle: dict[str, Optional[int]] = {}
    for k in sorted(set(k_set)):
        if n <= ORACLE_N_LIMIT.get(k, 0):
            oracle[str(k)] = _cached_oracle(t, k, cache, canon)
        else:
            oracle[str(k)] = None
    oracle_power: dict[str, Optional[int]] = {}
    for k in sorted(set(k_set) & {2, 3}):
        if n <= POWER_IDENTITY_N_LIMIT:
            oracle_power[str(k)] = _cached_oracle(t, k, cache, canon, powered=True)
        else:
            oracle_power[str(k)] = None

    ranks = leaf_ranks(t)
    rank_counts: dict[str, int] = {}
    for r in ranks:
        key = "none" if r is None else str(r)
        rank_counts[key] = rank_counts.get(key, 0) + 1

    stem_drop_ok = True
    for v in range(n):
        leaf_nbrs = [u for u in t.graph.adj[v] if t.graph.degree(u) == 1]
        if len(leaf_nbrs) >= 2:
            if eternal2_linear(delete_leaf(t, leaf_nbrs[0]), 0)[0] != linear:
                stem_drop_ok = False
            break

    dp_brute_ok = all(
        distance_domination(t, k).value == distance_domination_brute(t.graph, k).value
        for k in (1, 2, 3)
    )

    return {
        "n": n,
        "canonical": canon,
        "graph6": emit_graph6(t.graph),
        "diameter": tree_diameter(t),
        "gamma": gamma,
        "gamma2": gamma2,
        "gamma_k": gamma_k,
        "eternal2_linear": linear,
        "eternal2_reduction": reduction,
        "root_independent": root_independent,
        "oracle": oracle,
        "oracle_power": oracle_power,
        "tight_domination": recognize_domination_tight(t)[0],
        "tight_distance2": recognize_distance2_tight(t),
        "critical_member": recognize_critical(t)[0],
        "critical": is_critical(t)[0],
        "leaf_rank_counts": rank_counts,
        "stem_drop_ok": stem_drop_ok,
        "dp_brute_ok": dp_brute_ok,
    }


def _cached_oracle(t: Tree, k: int, cache, canon: str, powered: bool = False) -> int:
    method = f"oracle-power-k{k}" if powered else f"oracle-k{k}"
    if cache is not None:
        hit = cache.get(canon, k, method)
        if hit is not None:
            return hit
    if powered:
        from .graphs import power_graph

        value = eternal_number(power_graph(t.graph, k), 1).m_min
    else:
        value = eternal_number(t.graph, k).m_min
    if cache is not None:
        cache.put(canon, k, method, value)
    return value


def _path(n: int) -> Tree:
    return Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def build_extras(k_set: tuple[int, ...], n_max: int) -> dict:
    paths = []
    for n in range(1, 31):
        row: dict = {"n": n, "linear": eternal2_linear(_path(n), 0)[0], "oracle": {}}
        for k in sorted(set(k_set) & {1, 2, 3}):
            if n <= ORACLE_N_LIMIT.get(k, 0):
                row["oracle"][str(k)] = eternal_number(_path(n).graph, k).m_min
        paths.append(row)

    spiders = []
    for n in range(2, 7):
        s = gen_spider(n)
        spiders.append(
            {
                "legs": n,
                "n": s.n,
                "gamma": distance_domination(s, 1).value,
                "eternal2": eternal2_linear(s, 0)[0],
            }
        )

    pendant = []
    for base_n in (1, 2, 3):
        for base in enumerate_trees(base_n):
            t2 = gen_pendant_paths(base, 2)
            pendant.append(
                {
                    "base": canonical_form(base),
                    "base_n": base_n,
                    "k": 2,
                    "n": t2.n,
                    "value": eternal2_linear(t2, 0)[0],
                    "method": "linear",
                }
            )
            t3 = gen_pendant_paths(base, 3)
            pendant.append(
                {
                    "base": canonical_form(base),
                    "base_n": base_n,
                    "k": 3,
                    "n": t3.n,
                    "value": eternal_number(t3.graph, 3).m_min,
                    "method": "oracle",
                }
            )

    balls = []
    for units, joins in ((1, ()), (2, ((0, 1, 1, 1),))):
        t = gen_regular_balls(3, 3, joins)
        balls.append(
            {
                "k": 3,
                "delta": 3,
                "units": units,
                "n": t.n,
                "value": eternal_number(t.graph, 3).m_min,
            }
        )

    counts = {str(n): sum(1 for _ in enumerate_trees(n)) for n in range(1, min(n_max, 12) + 1)}

    return {
        "paths": paths,
        "spiders": spiders,
        "pendant_paths": pendant,
        "regular_balls": balls,
        "tree_counts": counts,
    }


# ---------------------------------------------------------------------------
# Theorem verdicts (pure functions of the report data)
# ---------------------------------------------------------------------------


def _verdict(name: str, checked: int, bad: list[dict], note: str = "") -> dict:
    return {
        "name": name,
        "holds": not bad,
        "checked": checked,
        "counterexamples": bad,
        "note": note,
    }


def _ref(rec: dict, detail: str) -> dict:
    return {"canonical": rec["canonical"], "graph6": rec["graph6"], "detail": detail}


def _check_path_formula(report: dict) -> dict:
    bad, checked = [], 0
    for row in report["extras"]["paths"]:
        n = row["n"]
        checked += 1
        if row["linear"] != ceil_div(n, 3):
            bad.append({"canonical": f"P{n}", "graph6": "", "detail": f"linear={row['linear']}"})
        for k_str, val in row["oracle"].items():
            checked += 1
            want = ceil_div(n, int(k_str) + 1)
            if val != want:
                bad.append({"canonical": f"P{n}", "graph6": "", "detail": f"oracle k={k_str}: {val} != {want}"})
    return _verdict("path-formula", checked, bad)


def _check_triple_agreement(report: dict) -> dict:
    bad, checked = [], 0
    for rec in report["trees"]:
        checked += 1
        lin, red, orc = rec["eternal2_linear"], rec["eternal2_reduction"], rec["oracle"].get("2")
        if lin != red or (orc is not None and lin != orc):
            bad.append(_ref(rec, f"linear={lin} reduction={red} oracle={orc}"))
        elif not rec["root_independent"]:
            bad.append(_ref(rec, "root-dependent linear sweep"))
    return _verdict("triple-agreement", checked, bad)


def _check_domination_tight(report: dict) -> dict:
    bad, checked = [], 0
    for rec in report["trees"]:
        checked += 1
        numeric = rec["eternal2_linear"] == rec["gamma"]
        if rec["tight_domination"] != numeric:
            bad.append(_ref(rec, f"member={rec['tight_domination']} numeric={numeric}"))
    return _verdict("domination-tight-family", checked, bad)


def _check_distance2_tight(report: dict) -> dict:
    bad, checked = [], 0
    for rec in report["trees"]:
        checked += 1
        lhs = rec["eternal2_linear"] == rec["gamma2"]
        rhs = rec["gamma"] == rec["gamma2"]
        if lhs != rhs:
            bad.append(_ref(rec, f"eternal==gamma2 is {lhs} but gamma==gamma2 is {rhs}"))
    return _verdict("distance2-tight-family", checked, bad)


def _check_critical_family(report: dict) -> dict:
    bad, checked = [], 0
    for rec in report["trees"]:
        checked += 1
        if rec["critical_member"] != rec["critical"]:
            bad.append(
                _ref(rec, f"member={rec['critical_member']} critical={rec['critical']}")
            )
    return _verdict(
        "critical-family",
        checked,
        bad,
        note="constructive membership vs. direct leaf-deletion criticality",
    )


def _check_sandwich(report: dict) -> dict:
    bad, checked = [], 0
    for rec in report["trees"]:
        checked += 1
        g, g2, e2, n = rec["gamma"], rec["gamma2"], rec["eternal2_linear"], rec["n"]
        if not (g2 <= e2 <= g <= n):
            bad.append(_ref(rec, f"gamma2={g2} eternal2={e2} gamma={g} n={n}"))
            continue
        for k_str, val in rec["oracle"].items():
            k = int(k_str)
            if k < 2 or val is None:
                continue
            lo = rec["gamma_k"][k_str]
            hi = rec["gamma_k"][str(max(1, k // 2))]
            if not (lo <= val <= hi):
                bad.append(_ref(rec, f"k={k}: gamma_k={lo} oracle={val} gamma_half={hi}"))
                break
    return _verdict("sandwich-bounds", checked, bad)


def _check_ceiling_bound(report: dict) -> dict:
    bad, checked = [], 0
    for rec in report["trees"]:
        checked += 1
        if rec["eternal2_linear"] > ceil_div(rec["n"], 3):
            bad.append(_ref(rec, f"eternal2={rec['eternal2_linear']} > ceil(n/3)"))
    return _verdict("ceiling-bound", checked, bad)


def _check_spiders(report: dict) -> dict:
    bad, checked = [], 0
    for row in report["extras"]["spiders"]:
        checked += 1
        if row["gamma"] != row["legs"] or row["eternal2"] != 2:
            bad.append({"canonical": f"spider-{row['legs']}", "graph6": "", "detail": str(row)})
    return _verdict("spider-family", checked, bad)


def _check_pendant_paths(report: dict) -> dict:
    bad, checked = [], 0
    for row in report["extras"]["pendant_paths"]:
        checked += 1
        if row["value"] != row["base_n"]:
            bad.append({"canonical": row["base"], "graph6": "", "detail": str(row)})
    return _verdict("pendant-paths-family", checked, bad)


def _check_regular_balls(report: dict) -> dict:
    bad, checked = [], 0
    for row in report["extras"]["regular_balls"]:
        checked += 1
        if row["value"] != row["units"]:
            bad.append({"canonical": f"balls-{row['units']}", "graph6": "", "detail": str(row)})
    return _verdict(
        "regular-balls-family",
        checked,
        bad,
        note="asserts value == unit count; the closed-form denominator is not asserted",
    )


def _check_power_identity(report: dict) -> dict:
    bad, checked = [], 0
    for rec in report["trees"]:
        for k_str, powered in rec["oracle_power"].items():
            if powered is None:
                continue
            checked += 1
            direct = rec["oracle"].get(k_str)
            if direct is not None and direct != powered:
                bad.append(_ref(rec, f"k={k_str}: direct={direct} powered={powered}"))
    return _verdict("power-identity", checked, bad)


def _check_tree_counts(report: dict) -> dict:
    bad, checked = [], 0
    counts = report["extras"]["tree_counts"]
    for n_str, count in sorted(counts.items(), key=lambda kv: int(kv[0])):
        n = int(n_str)
        if n > 10:
            continue
        checked += 1
        want = EXPECTED_TREE_COUNTS[n - 1]
        if count != want:
            bad.append({"canonical": f"n={n}", "graph6": "", "detail": f"count={count} want={want}"})
    return _verdict("tree-counts", checked, bad)


def _check_deep_leaf(report: dict) -> dict:
    bad, checked = [], 0
    for rec in report["trees"]:
        for k in (1, 2, 3):
            if rec["diameter"] >= 2 * k:
                checked += 1
                if rec["leaf_rank_counts"].get(str(k), 0) < 1:
                    bad.append(_ref(rec, f"diameter {rec['diameter']} but no rank-{k} vertex"))
    return _verdict("deep-leaf", checked, bad)


def _check_stem_drop(report: dict) -> dict:
    bad, checked = [], 0
    for rec in report["trees"]:
        checked += 1
        if not rec["stem_drop_ok"]:
            bad.append(_ref(rec, "dropping one of twin leaves changed the value"))
    return _verdict("stem-drop-invariance", checked, bad)


def _check_dp_vs_brute(report: dict) -> dict:
    bad, checked = [], 0
    for rec in report["trees"]:
        checked += 1
        if not rec["dp_brute_ok"]:
            bad.append(_ref(rec, "tree DP disagrees with brute force"))
    return _verdict("dp-vs-brute", checked, bad)


THEOREM_CHECKS: dict[str, Callable[[dict], dict]] = {
    "path-formula": _check_path_formula,
    "triple-agreement": _check_triple_agreement,
    "domination-tight-family": _check_domination_tight,
    "distance2-tight-family": _check_distance2_tight,
    "critical-family": _check_critical_family,
    "sandwich-bounds": _check_sandwich,
    "ceiling-bound": _check_ceiling_bound,
    "spider-family": _check_spiders,
    "pendant-paths-family": _check_pendant_paths,
    "regular-balls-family": _check_regular_balls,
    "power-identity": _check_power_identity,
    "tree-counts": _check_tree_counts,
    "deep-leaf": _check_deep_leaf,
    "stem-drop-invariance": _check_stem_drop,
    "dp-vs-brute": _check_dp_vs_brute,
}


def compute_verdicts(report: dict, theorems: Iterable[str]) -> list[dict]:
    verdicts = []
    for name in theorems:
        if name not in THEOREM_CHECKS:
            raise ValueError(f"unknown theorem {name!r}; known: {', '.join(THEOREM_CHECKS)}")
        verdicts.append(THEOREM_CHECKS[name](report))
    return verdicts


def revalidate(report: dict) -> list[dict]:
    """Recompute all verdicts of a loaded report from its records."""
    names = [v["name"] for v in report["theorems"]]
    return compute_verdicts(report, names)


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def summary_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["theorem", "holds", "checked", "counterexamples", "first_counterexample"])
    for v in report["theorems"]:
        first = v["counterexamples"][0]["canonical"] if v["counterexamples"] else ""
        writer.writerow([v["name"], v["holds"], v["checked"], len(v["counterexamples"]), first])
    return buf.getvalue()
