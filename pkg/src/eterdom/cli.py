"""Command-line interface.

Exit codes: 0 success (verification fully green), 1 verification found a
counterexample, 2 input error, 3 resource-guard refusal.
"""

from __future__ import annotations

import functools
import json
import random
import sys
from pathlib import Path

import click

from . import __version__
from .bench import bench_csv, random_attachment_tree, run_bench
from .cache import ResultCache
from .domination import distance_domination, distance_domination_brute
from .errors import GraphFormatError, GuardRailError, NotATreeError
from .eternal import eternal2_linear, eternal2_reduction
from .families import (
    canonical_form,
    enumerate_trees,
    gen_pendant_paths,
    gen_regular_balls,
    gen_spider,
)
from .graphs import (
    Graph,
    Tree,
    emit_edge_list,
    emit_graph6,
    is_connected,
    parse_edge_list,
    parse_graph6,
)
from .oracle import eternal_number, replay_defense
from .reports import report_to_json, summary_csv
from .verify import run_verification, scan_equality_conjecture


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except GuardRailError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except (GraphFormatError, NotATreeError, ValueError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)

    return wrapper


def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def _load_graph(source: str, fmt: str) -> Graph:
    text = _read_input(source)
    if fmt == "edgelist":
        return parse_edge_list(text)
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            return parse_graph6(line)
    raise GraphFormatError("no graph6 line found in input")


def _write_out(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=not text.endswith("\n"))


@click.group()
@click.version_option(version=__version__, prog_name="eterdom")
def main() -> None:
    """Eternal distance-k domination toolkit for trees."""


@main.command()
@click.option("--input", "source", default="-", help="Input file or - for stdin.")
@click.option("--format", "fmt", type=click.Choice(["edgelist", "graph6"]), default="edgelist")
@click.option("--k", default=2, show_default=True, help="Distance parameter.")
@click.option(
    "--method",
    type=click.Choice(["auto", "linear", "reduction", "oracle"]),
    default="auto",
    show_default=True,
)
@click.option("--out", default=None, help="Write the JSON record here instead of stdout.")
@click.option("--transcript", default=0, show_default=True,
              help="With the oracle, also emit a defense transcript for this many random attacks.")
@click.option("--seed", default=0, show_default=True, help="Seed for transcript attacks.")
@click.option("--cache", "use_cache", is_flag=True, help="Use the append-only result cache.")
@_guarded
def compute(source, fmt, k, method, out, transcript, seed, use_cache):
    """Compute domination and eternal domination numbers of one graph."""
    g = _load_graph(source, fmt)
    if k < 1:
        raise ValueError("k must be >= 1")
    tree = None
    try:
        tree = Tree.from_graph(g)
    except NotATreeError:
        tree = None

    if method == "auto":
        method = "linear" if (tree is not None and k == 2) else "oracle"
    if method in ("linear", "reduction"):
        if tree is None:
            raise NotATreeError(f"method {method!r} requires a tree input")
        if k != 2:
            raise ValueError(f"method {method!r} computes the k = 2 number; got k={k}")

    record: dict = {
        "n": g.n,
        "edges": g.edge_count,
        "is_tree": tree is not None,
        "k": k,
        "method": method,
    }
    if tree is not None:
        record["gamma"] = distance_domination(tree, 1).value
        record["gamma2"] = distance_domination(tree, 2).value
        record["gamma_k"] = distance_domination(tree, k).value
    else:
        record["gamma"] = distance_domination_brute(g, 1).value
        record["gamma2"] = distance_domination_brute(g, 2).value
        record["gamma_k"] = distance_domination_brute(g, k).value

    cache = ResultCache() if use_cache else None
    if method == "linear":
        record["eternal"] = eternal2_linear(tree, 0)[0]
    elif method == "reduction":
        record["eternal"] = eternal2_reduction(tree).total
    else:
        if not is_connected(g):
            raise ValueError("the oracle requires a connected graph")
        canon = canonical_form(tree) if tree is not None else None
        value = None
        if cache is not None and canon is not None:
            value = cache.get(canon, k, f"oracle-k{k}")
        if value is None:
            result = eternal_number(g, k)
            value = result.m_min
            if cache is not None and canon is not None:
                cache.put(canon, k, f"oracle-k{k}", value)
        record["eternal"] = value
        if transcript > 0:
            result = eternal_number(g, k)
            rng = random.Random(seed)
            attacks = [rng.randrange(g.n) for _ in range(transcript)]
            replay = replay_defense(g, k, result.winning[0], attacks)
            record["transcript"] = {
                "start": list(result.winning[0]),
                "attacks": attacks,
                "responses": [list(c) for c in replay.configs],
                "failed_at": replay.failed_at,
            }
    _write_out(json.dumps(record, indent=2, sort_keys=True), out)


@main.command()
@click.option("--nmax", default=10, show_default=True)
@click.option("--k", "k_set", multiple=True, type=int, help="Distance parameters (repeatable).")
@click.option("--theorems", default="all", show_default=True,
              help="Comma-separated theorem names, or 'all'.")
@click.option("--out", default=None, help="Base path; writes <out>.json, <out>.csv and figures.")
@click.option("--workers", default=1, show_default=True)
@click.option("--cache", "use_cache", is_flag=True, help="Use the append-only result cache.")
@_guarded
def verify(nmax, k_set, theorems, out, workers, use_cache):
    """Run the exhaustive theorem suite and emit a report."""
    from .reports import THEOREM_CHECKS

    ks = tuple(k_set) if k_set else (2, 3, 4)
    names = list(THEOREM_CHECKS) if theorems == "all" else [s.strip() for s in theorems.split(",")]
    cache = ResultCache() if use_cache else None
    report = run_verification(nmax, ks, names, workers=workers, cache=cache)

    for verdict in report["theorems"]:
        status = "PASS" if verdict["holds"] else "FAIL"
        extra = ""
        if verdict["counterexamples"]:
            extra = f"  first counterexample: {verdict['counterexamples'][0]['canonical']}"
        click.echo(f"{status} {verdict['name']} (checked {verdict['checked']}){extra}")

    if out:
        base = out[:-5] if out.endswith(".json") else out
        Path(base + ".json").write_text(report_to_json(report), encoding="utf-8")
        Path(base + ".csv").write_text(summary_csv(report), encoding="utf-8")
        from .plots import save_verify_figures

        figures = save_verify_figures(report, base)
        click.echo(f"report: {base}.json, {base}.csv, " + ", ".join(figures))
    else:
        click.echo(report_to_json(report))
    if not all(v["holds"] for v in report["theorems"]):
        sys.exit(1)


@main.command()
@click.option("--family", type=click.Choice(["spider", "pendant-paths", "regular-balls"]),
              required=True)
@click.option("--legs", default=3, show_default=True, help="Spider: number of middles.")
@click.option("--base-path", default=2, show_default=True,
              help="Pendant paths: use a path on this many vertices as the base.")
@click.option("--base-input", default=None,
              help="Pendant paths: read the base tree from this edge-list file instead.")
@click.option("--k", default=2, show_default=True, help="Pendant path length / ball radius scale.")
@click.option("--delta", default=3, show_default=True, help="Regular balls: degree bound.")
@click.option("--units", default=1, show_default=True, help="Regular balls: unit count (chained).")
@click.option("--format", "fmt", type=click.Choice(["edgelist", "graph6"]), default="edgelist")
@click.option("--out", default=None)
@_guarded
def generate(family, legs, base_path, base_input, k, delta, units, fmt, out):
    """Generate a named family member and print it with a provenance header."""
    if family == "spider":
        tree = gen_spider(legs)
        header = f"# family=spider legs={legs}"
    elif family == "pendant-paths":
        if base_input:
            base = Tree.from_graph(_load_graph(base_input, "edgelist"))
        else:
            base = Tree.from_edges(base_path, [(i, i + 1) for i in range(base_path - 1)])
        tree = gen_pendant_paths(base, k)
        header = f"# family=pendant-paths base_n={base.n} k={k}"
    else:
        if units < 1:
            raise ValueError("units must be >= 1")
        size = None
        joins = []
        from .families import regular_ball_size

        size = regular_ball_size(k, delta)
        for i in range(units - 1):
            joins.append((i, size - 1, i + 1, size - 1))
        tree = gen_regular_balls(k, delta, tuple(joins))
        header = f"# family=regular-balls k={k} delta={delta} units={units}"
    body = emit_edge_list(tree.graph) if fmt == "edgelist" else emit_graph6(tree.graph) + "\n"
    _write_out(header + "\n" + body, out)


@main.command("enumerate")
@click.option("--n", "order", required=True, type=int, help="Tree order to enumerate.")
@click.option("--format", "fmt", type=click.Choice(["graph6", "edgelist"]), default="graph6")
@click.option("--out", default=None)
@_guarded
def enumerate_cmd(order, fmt, out):
    """Stream one representative per isomorphism class of trees on n vertices."""
    lines = []
    for i, t in enumerate(enumerate_trees(order)):
        if fmt == "graph6":
            lines.append(emit_graph6(t.graph))
        else:
            lines.append(f"# tree {i}")
            lines.append(emit_edge_list(t.graph).rstrip("\n"))
    _write_out("\n".join(lines) + "\n", out)


@main.command()
@click.option("--sizes", default="100000,1000000", show_default=True,
              help="Comma-separated tree orders.")
@click.option("--trials", default=3, show_default=True)
@click.option("--seed", default=1, show_default=True)
@click.option("--out", default=None, help="Base path; writes <out>.csv and a scaling figure.")
@_guarded
def bench(sizes, trials, seed, out):
    """Time the linear solver on seeded random trees; persist a CSV table."""
    size_list = [int(s) for s in sizes.split(",") if s.strip()]
    rows = run_bench(size_list, trials, seed)
    text = bench_csv(rows)
    if out:
        base = out[:-4] if out.endswith(".csv") else out
        Path(base + ".csv").write_text(text, encoding="utf-8")
        if rows:
            from .plots import save_bench_figure

            figure = save_bench_figure(rows, base)
            click.echo(f"bench: {base}.csv, {figure}")
    else:
        click.echo(text, nl=False)


@main.command("scan-conjectures")
@click.option("--nmax", default=8, show_default=True)
@click.option("--k", "k_set", multiple=True, type=int, required=True,
              help="Distance parameters to scan (each must be > 2).")
@click.option("--out", default=None)
@_guarded
def scan_conjectures(nmax, k_set, out):
    """Scan small trees for counterexamples to the equality conjecture (k > 2)."""
    result = scan_equality_conjecture(nmax, tuple(k_set))
    for scan in result["scans"]:
        click.echo(f"k={scan['k']}: scanned {scan['trees_scanned']} trees "
                   f"up to n={scan['n_scanned_up_to']}: {scan['verdict']}")
    _write_out(json.dumps(result, indent=2, sort_keys=True), out)


if __name__ == "__main__":
    main()
