"""Benchmark result rows, CSV serialization, and summary statistics.

The CSV schema (one row per trial) is the stability contract consumed by
the plotting package and external tooling:

    experiment,heap,n,param,trial,comparisons,links,wallNanos

Reruns with identical arguments produce identical files except for the
wallNanos column.  Rows are written in canonical order (experiment, heap,
n, param, trial) regardless of execution order.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

CSV_FIELDS = ("experiment", "heap", "n", "param", "trial",
              "comparisons", "links", "wallNanos")


@dataclass(frozen=True)
class ResultRow:
    experiment: str
    heap: str
    n: int
    param: float
    trial: int
    comparisons: int
    links: int
    wall_nanos: int = 0

    def key(self):
        return (self.experiment, self.heap, self.n, self.param, self.trial)

    def group(self):
        return (self.experiment, self.heap, self.n, self.param)


def write_rows(path, rows: Iterable[ResultRow]) -> None:
    ordered = sorted(rows, key=ResultRow.key)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_FIELDS)
        for r in ordered:
            w.writerow([r.experiment, r.heap, r.n, _fmt_param(r.param),
                        r.trial, r.comparisons, r.links, r.wall_nanos])


def _fmt_param(p: float) -> str:
    return str(int(p)) if float(p).is_integer() else repr(float(p))


def read_rows(path) -> list[ResultRow]:
    rows = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(header) != CSV_FIELDS:
            raise ValueError(f"{path}: unexpected CSV header {header!r}")
        for lineno, rec in enumerate(reader, start=2):
            if not rec:
                continue
            try:
                rows.append(ResultRow(rec[0], rec[1], int(rec[2]),
                                      float(rec[3]), int(rec[4]), int(rec[5]),
                                      int(rec[6]), int(rec[7])))
            except (ValueError, IndexError) as exc:
                raise ValueError(f"{path}:{lineno}: malformed row {rec!r}") from exc
    return rows


@dataclass(frozen=True)
class GroupStats:
    experiment: str
    heap: str
    n: int
    param: float
    trials: int
    mean_comparisons: float
    min_comparisons: int
    max_comparisons: int
    mean_links: float
    min_links: int
    max_links: int


def lg_factorial(n: int) -> float:
    """lg(n!), the information-theoretic comparison lower bound for sorting."""
    return math.lgamma(n + 1) / math.log(2)


def summarize(rows: Sequence[ResultRow]):
    """Per-(experiment, heap, n, param) means and extremes, plus pairwise
    mean ratios between heaps sharing (experiment, n, param).

    Returns (stats, ratios): ``ratios`` maps (experiment, n, param) to a
    dict with ``<a>/<b> comparisons`` and ``<a>/<b> links`` entries, and for
    uniform-sorting groups each heap also gets a ``comparisons/lg(n!)``
    entry.
    """
    groups: dict = {}
    for r in rows:
        groups.setdefault(r.group(), []).append(r)
    stats = []
    for (exp, heap, n, param), rs in sorted(groups.items()):
        comps = [r.comparisons for r in sorted(rs, key=lambda r: r.trial)]
        links = [r.links for r in sorted(rs, key=lambda r: r.trial)]
        stats.append(GroupStats(exp, heap, n, param, len(rs),
                                sum(comps) / len(comps), min(comps), max(comps),
                                sum(links) / len(links), min(links), max(links)))
    by_setting: dict = {}
    for s in stats:
        by_setting.setdefault((s.experiment, s.n, s.param), []).append(s)
    ratios: dict = {}
    for setting, ss in sorted(by_setting.items()):
        entry: dict = {}
        for a in ss:
            if a.experiment == "uniform":
                entry[f"{a.heap} comparisons/lg(n!)"] = (
                    a.mean_comparisons / lg_factorial(a.n))
            for b in ss:
                if a.heap == b.heap:
                    continue
                if b.mean_comparisons:
                    entry[f"{a.heap}/{b.heap} comparisons"] = (
                        a.mean_comparisons / b.mean_comparisons)
                if b.mean_links:
                    entry[f"{a.heap}/{b.heap} links"] = (
                        a.mean_links / b.mean_links)
        ratios[setting] = entry
    return stats, ratios


def summary_table(stats: Sequence[GroupStats], ratios: dict) -> str:
    lines = [f"{'experiment':<11} {'heap':<16} {'n':>8} {'param':>9} {'trials':>6} "
             f"{'comparisons mean':>17} {'min':>10} {'max':>10} "
             f"{'links mean':>12} {'min':>10} {'max':>10}"]
    for s in stats:
        lines.append(
            f"{s.experiment:<11} {s.heap:<16} {s.n:>8} {_fmt_param(s.param):>9} "
            f"{s.trials:>6} {s.mean_comparisons:>17.1f} {s.min_comparisons:>10} "
            f"{s.max_comparisons:>10} {s.mean_links:>12.1f} {s.min_links:>10} "
            f"{s.max_links:>10}")
    for setting, entry in ratios.items():
        if not entry:
            continue
        exp, n, param = setting
        lines.append(f"-- {exp} n={n} param={_fmt_param(param)}")
        for name, value in sorted(entry.items()):
            lines.append(f"   {name:<40} {value:.4f}")
    return "\n".join(lines)
