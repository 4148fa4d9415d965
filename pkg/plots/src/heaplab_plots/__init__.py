"""Render benchmark figures from heaplab result CSVs.

Input is the benchmark CSV schema (header ``experiment,heap,n,param,trial,
comparisons,links,wallNanos``); this package shares nothing else with the
library that produced it.  For one experiment it draws, per heap, a solid
line for mean comparisons and a dashed line for mean links over the chosen
x axis (``n`` or ``param``), with one shaded band per heap spanning the
minimum to maximum per-trial cost.  Means are computed as sum/len over
trial-ordered rows so they match the producer's summary statistics exactly.

Colours: pairing red, smooth green, slim blue; other heap names cycle
through the remaining default colours.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

__version__ = "0.1.0"

CSV_FIELDS = ("experiment", "heap", "n", "param", "trial",
              "comparisons", "links", "wallNanos")

HEAP_COLORS = {"pairing": "tab:red", "smooth": "tab:green", "slim": "tab:blue"}
FALLBACK_COLORS = ("tab:orange", "tab:purple", "tab:brown", "tab:pink",
                   "tab:gray", "tab:olive", "tab:cyan")


@dataclass
class PlotSpec:
    csv_path: str
    experiment: str
    out_path: str
    x_field: str = "n"            # "n" or "param"
    log_x: Optional[bool] = None  # None: log for size sweeps, linear for params


@dataclass
class HeapSeries:
    heap: str
    xs: list = field(default_factory=list)
    mean_comparisons: list = field(default_factory=list)
    mean_links: list = field(default_factory=list)
    low: list = field(default_factory=list)
    high: list = field(default_factory=list)


def read_csv_rows(path: str) -> list[dict]:
    rows = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or tuple(reader.fieldnames) != CSV_FIELDS:
            raise ValueError(f"{path}: unexpected CSV header {reader.fieldnames!r}")
        for rec in reader:
            rows.append({
                "experiment": rec["experiment"],
                "heap": rec["heap"],
                "n": int(rec["n"]),
                "param": float(rec["param"]),
                "trial": int(rec["trial"]),
                "comparisons": int(rec["comparisons"]),
                "links": int(rec["links"]),
            })
    return rows


def build_series(rows: list[dict], experiment: str,
                 x_field: str = "n") -> list[HeapSeries]:
    """Per-heap mean/extreme series over the x axis for one experiment.

    Means are sum/len over the trial-sorted per-trial counts; the band is
    the range from the smallest links count to the largest comparisons
    count among the trials (one band per heap, covering both curves).
    """
    if x_field not in ("n", "param"):
        raise ValueError(f"x_field must be 'n' or 'param', not {x_field!r}")
    chosen = [r for r in rows if r["experiment"] == experiment]
    if not chosen:
        available = sorted({r["experiment"] for r in rows})
        raise ValueError(
            f"no rows for experiment {experiment!r}; available: "
            f"{', '.join(available) if available else '(none)'}")
    groups: dict = {}
    for r in chosen:
        groups.setdefault((r["heap"], r[x_field]), []).append(r)
    series: dict[str, HeapSeries] = {}
    for (heap, x) in sorted(groups):
        recs = sorted(groups[(heap, x)], key=lambda r: r["trial"])
        comps = [r["comparisons"] for r in recs]
        links = [r["links"] for r in recs]
        s = series.setdefault(heap, HeapSeries(heap))
        s.xs.append(x)
        s.mean_comparisons.append(sum(comps) / len(comps))
        s.mean_links.append(sum(links) / len(links))
        s.low.append(min(links))
        s.high.append(max(comps))
    return [series[h] for h in sorted(series)]


def color_for(heap: str, index: int) -> str:
    return HEAP_COLORS.get(heap, FALLBACK_COLORS[index % len(FALLBACK_COLORS)])


def render_figure(csv_path: str, experiment: str, out_path: str,
                  x_field: str = "n", log_x: Optional[bool] = None,
                  title: Optional[str] = None) -> str:
    """Draw the standard figure for one experiment and write it to
    ``out_path`` (format from the extension).  Returns the output path."""
    rows = read_csv_rows(csv_path)
    series = build_series(rows, experiment, x_field)
    if log_x is None:
        log_x = x_field == "n"
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for i, s in enumerate(series):
        color = color_for(s.heap, i)
        ax.fill_between(s.xs, s.low, s.high, color=color, alpha=0.15,
                        linewidth=0)
        ax.plot(s.xs, s.mean_comparisons, color=color, linestyle="-",
                marker="o", markersize=3, label=f"{s.heap} comparisons")
        ax.plot(s.xs, s.mean_links, color=color, linestyle="--",
                marker="o", markersize=3, label=f"{s.heap} links")
    if log_x and all(x > 0 for s in series for x in s.xs):
        ax.set_xscale("log", base=2)
    ax.set_xlabel("input size n" if x_field == "n" else "family parameter")
    ax.set_ylabel("operations per run")
    ax.set_title(title or experiment)
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(out_path)
    plt.close(fig)
    return out_path


def render(spec: PlotSpec) -> str:
    return render_figure(spec.csv_path, spec.experiment, spec.out_path,
                         x_field=spec.x_field, log_x=spec.log_x)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="heaplab-plot",
        description="render per-heap comparison/link curves from a "
                    "benchmark results CSV")
    parser.add_argument("csv")
    parser.add_argument("--experiment", required=True)
    parser.add_argument("--x", choices=("n", "param"), default="n")
    parser.add_argument("--out", default=None,
                        help="output image path (default: <csv>.<experiment>.png)")
    scale = parser.add_mutually_exclusive_group()
    scale.add_argument("--log-x", dest="log_x", action="store_true",
                       default=None)
    scale.add_argument("--linear-x", dest="log_x", action="store_false")
    parser.add_argument("--title", default=None)
    args = parser.parse_args(argv)
    out = args.out or f"{args.csv.rsplit('.', 1)[0]}.{args.experiment}.png"
    try:
        render_figure(args.csv, args.experiment, out, x_field=args.x,
                      log_x=args.log_x, title=args.title)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
