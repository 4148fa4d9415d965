"""CSV schema, summaries, and the command line front end."""

import csv
import os

import pytest

from heaplab.cli import main
from heaplab.results import (
    ResultRow,
    lg_factorial,
    read_rows,
    summarize,
    summary_table,
    write_rows,
)


def strip_wall(path):
    with open(path) as fh:
        rows = list(csv.reader(fh))
    return [r[:-1] for r in rows]


class TestResults:
    def test_roundtrip(self, tmp_path):
        rows = [ResultRow("uniform", "slim", 8, 0.0, 1, 30, 20, 5),
                ResultRow("uniform", "slim", 8, 0.0, 0, 31, 21, 6)]
        path = tmp_path / "r.csv"
        write_rows(path, rows)
        back = read_rows(path)
        assert back[0].trial == 0 and back[1].trial == 1  # canonical order
        assert back[0].comparisons == 31

    def test_malformed_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("experiment,heap,n,param,trial,comparisons,links,wallNanos\n"
                        "uniform,slim,8,0,0,notanint,2,3\n")
        with pytest.raises(ValueError, match="bad.csv:2"):
            read_rows(path)

    def test_single_row_stats(self):
        rows = [ResultRow("blocks", "smooth", 10, 2.0, 0, 60, 40)]
        stats, ratios = summarize(rows)
        s = stats[0]
        assert s.mean_comparisons == s.min_comparisons == s.max_comparisons == 60
        assert s.mean_links == 40

    def test_pairwise_ratio(self):
        rows = [ResultRow("er", "smooth", 10, 1.0, 0, 120, 60),
                ResultRow("er", "pairing", 10, 1.0, 0, 100, 100)]
        _, ratios = summarize(rows)
        entry = ratios[("er", 10, 1.0)]
        assert entry["smooth/pairing comparisons"] == pytest.approx(1.2)
        assert entry["pairing/smooth links"] == pytest.approx(100 / 60)

    def test_uniform_gets_lower_bound_column(self):
        rows = [ResultRow("uniform", "pairing", 16, 0.0, 0, 60, 60)]
        _, ratios = summarize(rows)
        entry = ratios[("uniform", 16, 0.0)]
        assert entry["pairing comparisons/lg(n!)"] == pytest.approx(
            60 / lg_factorial(16))

    def test_table_renders(self):
        rows = [ResultRow("uniform", "slim", 8, 0.0, 0, 30, 20)]
        text = summary_table(*summarize(rows))
        assert "uniform" in text and "slim" in text


class TestCli:
    def test_sort_bench_writes_deterministic_csv(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["sort-bench", "--family", "uniform", "--heaps", "pairing,slim",
                "--sizes", "64,128", "--trials", "2", "--seed", "7"]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        assert strip_wall(a) == strip_wall(b)

    def test_pairing_rows_have_equal_counts(self, tmp_path):
        out = tmp_path / "p.csv"
        assert main(["sort-bench", "--family", "uniform", "--heaps", "pairing",
                     "--sizes", "4", "--trials", "1", "--seed", "7",
                     "--out", str(out)]) == 0
        rows = read_rows(out)
        assert len(rows) == 1
        assert rows[0].links == rows[0].comparisons

    def test_dijkstra_bench(self, tmp_path):
        out = tmp_path / "d.csv"
        assert main(["dijkstra-bench", "--family", "er", "--heaps",
                     "smooth,pairing", "--sizes", "30", "--p", "0.5",
                     "--trials", "2", "--seed", "3", "--out", str(out)]) == 0
        rows = read_rows(out)
        assert {r.heap for r in rows} == {"smooth", "pairing"}
        assert all(r.comparisons >= 0 and r.links >= 0 for r in rows)

    def test_unknown_heap_is_usage_error(self, tmp_path, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["sort-bench", "--family", "uniform", "--heaps", "bogus",
                  "--sizes", "8", "--out", str(tmp_path / "x.csv")])
        assert exc.value.code == 2

    def test_unknown_family_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["sort-bench", "--family", "nope", "--sizes", "8"])
        assert exc.value.code == 2

    def test_unwritable_out_fails_nonzero(self, tmp_path):
        assert main(["sort-bench", "--family", "uniform", "--sizes", "8",
                     "--trials", "1",
                     "--out", str(tmp_path / "no" / "dir" / "x.csv")]) == 1

    def test_audit_subcommand_passes(self, capsys):
        assert main(["audit", "--mode", "slim", "--ops", "800",
                     "--size-cap", "128", "--seed", "5"]) == 0
        assert "all within bounds" in capsys.readouterr().out

    def test_audit_rows_out(self, tmp_path, capsys):
        rows_path = tmp_path / "rows.csv"
        assert main(["audit", "--mode", "smooth", "--ops", "300",
                     "--size-cap", "64", "--seed", "5",
                     "--rows-out", str(rows_path)]) == 0
        with open(rows_path) as fh:
            header = fh.readline().strip().split(",")
        assert header[:3] == ["op", "n", "actual"]

    def test_summarize_subcommand(self, tmp_path, capsys):
        out = tmp_path / "s.csv"
        main(["sort-bench", "--family", "uniform", "--heaps", "pairing",
              "--sizes", "16", "--trials", "2", "--seed", "1",
              "--out", str(out)])
        capsys.readouterr()
        assert main(["summarize", str(out)]) == 0
        assert "comparisons/lg(n!)" in capsys.readouterr().out

    def test_summarize_missing_file(self, capsys):
        assert main(["summarize", "/nonexistent/x.csv"]) == 1

    def test_gen_permutation(self, tmp_path):
        out = tmp_path / "perm.txt"
        assert main(["gen", "--family", "uniform", "--n", "4", "--seed",
                     "12345", "--out", str(out)]) == 0
        assert out.read_text() == "3\n1\n4\n2\n"

    def test_gen_graph(self, tmp_path):
        out = tmp_path / "g.txt"
        assert main(["gen", "--family", "er", "--n", "6", "--param", "1.0",
                     "--seed", "1", "--out", str(out)]) == 0
        lines = out.read_text().strip().splitlines()
        n, m = map(int, lines[0].split())
        assert n == 6 and m == 15 and len(lines) == 16

    def test_out_dir_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("HEAPLAB_OUT_DIR", str(tmp_path))
        assert main(["sort-bench", "--family", "uniform", "--heaps", "slim",
                     "--sizes", "8", "--trials", "1", "--seed", "1"]) == 0
        assert (tmp_path / "sort-uniform.csv").exists()
