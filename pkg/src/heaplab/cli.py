"""Benchmark and self-test command line front end.

Subcommands
-----------
sort-bench      operation-count benchmark for sorting mode
dijkstra-bench  operation-count benchmark for shortest paths (delete-min only)
audit           amortized-cost audit of random operation scripts
selftest        oracle differential tests, link-discipline sweep, treap check
summarize       per-group statistics and heap-vs-heap ratios for a results CSV
gen             dump a generated permutation or graph in the text format

Results are written as CSV (one row per trial, canonical order, identical
across reruns except the wallNanos column).  HEAPLAB_OUT_DIR sets the
default output directory.  With --figures, sort/dijkstra benches hand the
CSV to the heaplab-plots package (if installed) and render the standard
figure next to it.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .analysis import audit_sequence, random_script, selftest
from .heaps import Linking
from .results import (
    ResultRow,
    read_rows,
    summarize,
    summary_table,
    write_rows,
)
from .workloads import (
    dump_graph,
    dump_permutation,
    gen_erdos_renyi,
    gen_localized,
    gen_regular,
    gen_separable,
    gen_sorted_blocks,
    gen_uniform,
    run_dijkstra,
    run_sorting,
)

SORT_FAMILIES = ("uniform", "separable", "localized", "blocks")
GRAPH_FAMILIES = ("er", "regular")
BENCH_HEAPS = ("pairing", "smooth", "slim", "pairing-classic", "pairing-pure")

DEFAULT_TRIALS = {"uniform": 5, "separable": 20, "localized": 10,
                  "blocks": 20, "er": 10, "regular": 10}


def _int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v]


def _float_list(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v]


def _out_path(given, default_name: str) -> str:
    if given:
        return given
    base = os.environ.get("HEAPLAB_OUT_DIR", ".")
    return os.path.join(base, default_name)


def _check_heaps(parser, heaps):
    for h in heaps:
        if h not in BENCH_HEAPS:
            parser.error(f"unknown heap {h!r}; choose from {', '.join(BENCH_HEAPS)}")


def _sort_perm(family: str, n: int, param: float, seed: int):
    if family == "uniform":
        return gen_uniform(n, seed)
    if family == "separable":
        return gen_separable(n, seed)
    if family == "localized":
        return gen_localized(n, param, seed)
    if family == "blocks":
        return gen_sorted_blocks(n, max(1, int(param)), seed)
    raise ValueError(family)


def cmd_sort_bench(parser, args) -> int:
    _check_heaps(parser, args.heaps)
    params = args.param if args.param else [0.0]
    trials = args.trials or DEFAULT_TRIALS[args.family]
    rows = []
    for n in args.sizes:
        for param in params:
            for heap in args.heaps:
                for trial in range(trials):
                    perm = _sort_perm(args.family, n, param, args.seed + trial)
                    t0 = time.perf_counter_ns()
                    counters = run_sorting(heap, perm)
                    wall = time.perf_counter_ns() - t0
                    rows.append(ResultRow(args.family, heap, n, param, trial,
                                          counters.comparisons, counters.links,
                                          wall))
    return _emit(args, rows, f"sort-{args.family}.csv", x_field="param"
                 if len(params) > 1 else "n")


def cmd_dijkstra_bench(parser, args) -> int:
    _check_heaps(parser, args.heaps)
    params = args.p if args.p else ([1.0] if args.family == "er" else [10.0])
    trials = args.trials or DEFAULT_TRIALS[args.family]
    rows = []
    for n in args.sizes:
        for param in params:
            for heap in args.heaps:
                for trial in range(trials):
                    seed = args.seed + trial
                    if args.family == "er":
                        graph = gen_erdos_renyi(n, param, seed)
                    else:
                        graph = gen_regular(n, int(param), seed)
                    t0 = time.perf_counter_ns()
                    _, counters = run_dijkstra(heap, graph)
                    wall = time.perf_counter_ns() - t0
                    rows.append(ResultRow(args.family, heap, n, param, trial,
                                          counters.comparisons, counters.links,
                                          wall))
    return _emit(args, rows, f"dijkstra-{args.family}.csv", x_field="param"
                 if len(params) > 1 else "n")


def _emit(args, rows, default_name, x_field="n") -> int:
    path = _out_path(args.out, default_name)
    try:
        write_rows(path, rows)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {len(rows)} rows to {path}")
    if getattr(args, "figures", False):
        try:
            from heaplab_plots import render_figure
        except ImportError:
            print("warning: heaplab-plots is not installed; skipping figures",
                  file=sys.stderr)
            return 0
        fig_path = os.path.splitext(path)[0] + ".png"
        render_figure(path, rows[0].experiment, fig_path, x_field=x_field)
        print(f"wrote figure to {fig_path}")
    return 0


def cmd_audit(parser, args) -> int:
    linking = Linking.STABLE if args.mode == "smooth" else Linking.ONE_SIDED
    script = random_script(args.ops, args.size_cap, args.seed,
                           include_decrease=args.decrease)
    report = audit_sequence(script, linking)
    print(report.to_table())
    if args.rows_out:
        import csv as _csv
        with open(args.rows_out, "w", newline="") as fh:
            w = _csv.writer(fh)
            for row in report.iter_csv_rows():
                w.writerow(row)
        print(f"wrote per-operation rows to {args.rows_out}")
    return 0 if report.all_pass else 1


def cmd_selftest(parser, args) -> int:
    return 0 if selftest(verbose=True, seed=args.seed) else 1


def cmd_summarize(parser, args) -> int:
    try:
        rows = read_rows(args.csv)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    stats, ratios = summarize(rows)
    print(summary_table(stats, ratios))
    return 0


def cmd_gen(parser, args) -> int:
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        if args.family in SORT_FAMILIES:
            perm = _sort_perm(args.family, args.n, args.param, args.seed)
            dump_permutation(perm, out)
        elif args.family == "er":
            dump_graph(gen_erdos_renyi(args.n, args.param, args.seed), out)
        elif args.family == "regular":
            dump_graph(gen_regular(args.n, int(args.param), args.seed), out)
        else:
            parser.error(f"unknown family {args.family!r}")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heaplab",
        description="operation-count benchmarks and self-checks for "
                    "smooth, slim, and pairing heaps")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sort-bench", help="sorting-mode operation counts")
    p.add_argument("--family", choices=SORT_FAMILIES, required=True)
    p.add_argument("--heaps", type=lambda s: s.split(","),
                   default=["pairing", "smooth", "slim"])
    p.add_argument("--sizes", type=_int_list, default=[1 << 12])
    p.add_argument("--param", type=_float_list, default=[],
                   help="family parameter list (eps for localized, "
                        "block cap for blocks)")
    p.add_argument("--trials", type=int, default=0,
                   help="trials per setting (default per family: "
                        "uniform 5, separable 20, localized 10, blocks 20)")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", default=None)
    p.add_argument("--figures", action="store_true",
                   help="also render the standard figure (needs heaplab-plots)")
    p.set_defaults(func=cmd_sort_bench)

    p = sub.add_parser("dijkstra-bench",
                       help="shortest-path delete-min operation counts")
    p.add_argument("--family", choices=GRAPH_FAMILIES, required=True)
    p.add_argument("--heaps", type=lambda s: s.split(","),
                   default=["pairing", "smooth", "slim"])
    p.add_argument("--sizes", type=_int_list, default=[500])
    p.add_argument("--p", type=_float_list, default=[],
                   help="family parameter list: edge probability (er) "
                        "or degree (regular; default 10)")
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", default=None)
    p.add_argument("--figures", action="store_true")
    p.set_defaults(func=cmd_dijkstra_bench)

    p = sub.add_parser("audit", help="amortized-cost audit of random scripts")
    p.add_argument("--mode", choices=("slim", "smooth"), required=True)
    p.add_argument("--ops", type=int, default=10000)
    p.add_argument("--size-cap", type=int, default=4096)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--decrease", action="store_true",
                   help="include simple decrease-key operations")
    p.add_argument("--rows-out", default=None,
                   help="write per-operation audit rows as CSV")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("selftest", help="run the packaged correctness checks")
    p.add_argument("--seed", type=int, default=2024)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("summarize", help="summary statistics for a results CSV")
    p.add_argument("csv")
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("gen", help="dump a generated input")
    p.add_argument("--family", choices=SORT_FAMILIES + GRAPH_FAMILIES,
                   required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--param", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(parser, args)


if __name__ == "__main__":
    sys.exit(main())
