"""Figure rendering for verification reports and benchmark tables."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_verify_figures(report: dict, out_base: str) -> list[str]:
    """Render the parameter scatter and the family counts next to the report."""
    paths = []

    fig, ax = plt.subplots(figsize=(7, 4.5))
    xs, e2, gam, gam2 = [], [], [], []
    for i, rec in enumerate(report["trees"]):
        jitter = (i % 7 - 3) * 0.04
        xs.append(rec["n"] + jitter)
        e2.append(rec["eternal2_linear"])
        gam.append(rec["gamma"])
        gam2.append(rec["gamma2"])
    ax.scatter(xs, gam, s=12, alpha=0.5, label="domination", color="#888888")
    ax.scatter(xs, e2, s=12, alpha=0.6, label="eternal distance-2", color="#1f77b4")
    ax.scatter(xs, gam2, s=12, alpha=0.5, label="distance-2 domination", color="#2ca02c")
    n_max = report["corpus"]["n_max"]
    ns = list(range(1, n_max + 1))
    ax.step(ns, [-(-n // 3) for n in ns], where="mid", color="#d62728",
            linewidth=1.2, label="ceil(n/3) bound")
    ax.set_xlabel("tree order n")
    ax.set_ylabel("parameter value")
    ax.set_title("Domination parameters over all trees")
    ax.legend(fontsize=8)
    fig.tight_layout()
    p = f"{out_base}_values.png"
    fig.savefig(p, dpi=150)
    plt.close(fig)
    paths.append(p)

    fig, ax = plt.subplots(figsize=(7, 4.5))
    ns = sorted({rec["n"] for rec in report["trees"]})
    def count(flag):
        return [sum(1 for r in report["trees"] if r["n"] == n and r[flag]) for n in ns]
    width = 0.28
    ax.bar([n - width for n in ns], count("tight_domination"), width, label="eternal = domination")
    ax.bar(ns, count("tight_distance2"), width, label="domination = distance-2")
    ax.bar([n + width for n in ns], count("critical"), width, label="deletion-critical")
    ax.set_xlabel("tree order n")
    ax.set_ylabel("trees in family")
    ax.set_title("Family membership counts per order")
    ax.legend(fontsize=8)
    fig.tight_layout()
    p = f"{out_base}_families.png"
    fig.savefig(p, dpi=150)
    plt.close(fig)
    paths.append(p)
    return paths


def save_bench_figure(rows, out_base: str) -> str:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot([r.n for r in rows], [r.ns_per_vertex for r in rows], "o-")
    ax.set_xscale("log")
    ax.set_xlabel("tree order n")
    ax.set_ylabel("ns per vertex")
    ax.set_title("Linear solver cost per vertex")
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    p = f"{out_base}_scaling.png"
    fig.savefig(p, dpi=150)
    plt.close(fig)
    return p
