import json

from click.testing import CliRunner

from eterdom.cli import main


def run(*args, input=None):
    return CliRunner().invoke(main, list(args), input=input, catch_exceptions=False)


P7 = "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n"
STAR3 = "0 1\n0 2\n0 3\n"


def test_compute_path7_auto():
    result = run("compute", "--k", "2", input=P7)
    assert result.exit_code == 0
    record = json.loads(result.output)
    assert record["eternal"] == 3
    assert record["method"] == "linear"
    assert record["gamma"] == 3 and record["gamma2"] == 2


def test_compute_star_k2():
    result = run("compute", "--k", "2", input=STAR3)
    assert json.loads(result.output)["eternal"] == 1


def test_compute_p4_k1_oracle():
    result = run("compute", "--k", "1", "--method", "oracle", input="0 1\n1 2\n2 3\n")
    record = json.loads(result.output)
    assert record["eternal"] == 2
    assert record["method"] == "oracle"


def test_compute_reduction_method():
    result = run("compute", "--method", "reduction", input=P7)
    assert json.loads(result.output)["eternal"] == 3


def test_compute_transcript():
    result = run("compute", "--method", "oracle", "--k", "2", "--transcript", "5",
                 "--seed", "3", input="0 1\n1 2\n2 3\n")
    record = json.loads(result.output)
    transcript = record["transcript"]
    assert transcript["failed_at"] is None
    assert len(transcript["responses"]) == 6
    for attack, response in zip(transcript["attacks"], transcript["responses"][1:]):
        assert attack in response


def test_compute_non_tree_with_tree_method_exits_2():
    cycle = "0 1\n1 2\n2 0\n"
    result = run("compute", "--method", "linear", input=cycle)
    assert result.exit_code == 2


def test_compute_parse_error_exits_2():
    result = run("compute", input="0 1\n0 1\n")
    assert result.exit_code == 2


def test_compute_guard_rail_exits_3():
    edges = "\n".join(f"{i} {i+1}" for i in range(29))
    result = run("compute", "--method", "oracle", input=edges)
    assert result.exit_code == 3


def test_compute_graph6_input():
    result = run("compute", "--format", "graph6", "--k", "2", input="DhC\n")
    record = json.loads(result.output)
    assert record["n"] == 5 and record["is_tree"] is True


def test_generate_spider():
    result = run("generate", "--family", "spider", "--legs", "3")
    assert result.exit_code == 0
    assert "# family=spider legs=3" in result.output
    assert "n 10" in result.output


def test_generate_pendant_paths():
    result = run("generate", "--family", "pendant-paths", "--base-path", "2", "--k", "2")
    assert "n 6" in result.output


def test_generate_regular_balls():
    result = run("generate", "--family", "regular-balls", "--k", "3", "--delta", "3",
                 "--units", "2")
    assert "n 8" in result.output


def test_generate_graph6_format_parses_back():
    from eterdom import parse_graph6

    result = run("generate", "--family", "spider", "--legs", "2", "--format", "graph6")
    line = [l for l in result.output.splitlines() if l and not l.startswith("#")][0]
    assert parse_graph6(line).n == 7


def test_enumerate_counts():
    result = run("enumerate", "--n", "7")
    lines = [l for l in result.output.splitlines() if l.strip()]
    assert len(lines) == 11


def test_enumerate_edgelist():
    result = run("enumerate", "--n", "4", "--format", "edgelist")
    assert result.output.count("# tree") == 2


def test_verify_small_green(tmp_path):
    out = tmp_path / "report"
    result = run("verify", "--nmax", "6", "--k", "2", "--theorems",
                 "triple-agreement,sandwich-bounds,tree-counts", "--out", str(out))
    assert result.exit_code == 0
    report = json.loads((tmp_path / "report.json").read_text())
    assert [v["name"] for v in report["theorems"]] == [
        "triple-agreement", "sandwich-bounds", "tree-counts"]
    assert (tmp_path / "report.csv").exists()
    assert (tmp_path / "report_values.png").stat().st_size > 0
    assert (tmp_path / "report_families.png").stat().st_size > 0


def test_verify_counterexample_exits_1(tmp_path):
    # at n = 10 the critical-family characterization has known gaps
    out = tmp_path / "r"
    result = run("verify", "--nmax", "10", "--k", "2", "--theorems", "critical-family",
                 "--out", str(out))
    assert result.exit_code == 1
    report = json.loads((tmp_path / "r.json").read_text())
    verdict = report["theorems"][0]
    assert verdict["holds"] is False
    assert len(verdict["counterexamples"]) == 3
    assert "FAIL critical-family" in result.output


def test_verify_unknown_theorem_exits_2():
    result = run("verify", "--nmax", "3", "--theorems", "bogus")
    assert result.exit_code == 2


def test_bench_zero_trials():
    result = run("bench", "--sizes", "100,200", "--trials", "0")
    assert result.exit_code == 0
    assert result.output.strip() == "n,trials,mean_seconds,ns_per_vertex"


def test_bench_small(tmp_path):
    out = tmp_path / "bench"
    result = run("bench", "--sizes", "200,400", "--trials", "1", "--seed", "5",
                 "--out", str(out))
    assert result.exit_code == 0
    lines = (tmp_path / "bench.csv").read_text().strip().splitlines()
    assert len(lines) == 3
    assert (tmp_path / "bench_scaling.png").exists()


def test_bench_deterministic_trees():
    from eterdom.bench import random_attachment_tree
    from eterdom import canonical_form

    first = [canonical_form(random_attachment_tree(50, seed)) for seed in (1, 2, 3)]
    second = [canonical_form(random_attachment_tree(50, seed)) for seed in (1, 2, 3)]
    assert first == second


def test_scan_conjectures_rejects_k2():
    result = run("scan-conjectures", "--k", "2", "--nmax", "4")
    assert result.exit_code == 2


def test_scan_conjectures_vacuous():
    result = run("scan-conjectures", "--k", "3", "--nmax", "1")
    assert result.exit_code == 0
    assert "no counterexample" in result.output


def test_cache_flag_reuses_results(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    first = run("compute", "--method", "oracle", "--k", "2", "--cache", input=P7)
    assert json.loads(first.output)["eternal"] == 3
    cache_file = tmp_path / ".eterdom-cache.jsonl"
    assert cache_file.exists()
    before = cache_file.read_text()
    second = run("compute", "--method", "oracle", "--k", "2", "--cache", input=P7)
    assert json.loads(second.output)["eternal"] == 3
    assert cache_file.read_text() == before
