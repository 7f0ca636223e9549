"""Command-line front end: solve, sweep, verify, and score subcommands.

Exit codes: 0 success; 1 verify-suite failure; 2 bad flags or invalid
parameter combinations; 3 I/O problems (missing/malformed input files,
unwritable output); 4 solver failure.  JSON output is byte-identical
across runs with the same inputs and seed, except for timing fields.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .fw import FwConfig
from .graph import Graph, load_edge_list
from .param import OptimizerConfig
from .report import (SOLVER_NAMES, format_float, load_selection_file,
                     run_sweep, score_selection, solve_with, write_report)
from .verify import SUITES, run_suites

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_BAD_FLAGS = 2
EXIT_IO = 3
EXIT_SOLVER = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dks",
        description="Densest k-subgraph via a diagonally loaded quadratic "
                    "relaxation: solvers, baselines, bounds, and theory checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one instance and print the result")
    solve.add_argument("--graph", required=True, help="edge-list file (optionally .gz)")
    solve.add_argument("--k", type=int, required=True, help="subgraph size")
    solve.add_argument("--lambda", dest="loading", type=float, default=1.0,
                       help="diagonal loading (default 1)")
    solve.add_argument("--solver", choices=SOLVER_NAMES, default="fw")
    solve.add_argument("--step-rule", choices=("option1", "option2"),
                       default="option1", help="Frank-Wolfe step-size rule")
    solve.add_argument("--max-iters", type=int, default=None,
                       help="iteration budget (default: 1000 fw / 200 param)")
    solve.add_argument("--gap-tol", type=float, default=None,
                       help="absolute FW gap tolerance (default: adaptive)")
    solve.add_argument("--lr", type=float, default=3.0,
                       help="learning rate for the param solver")
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--output", choices=("text", "json"), default="text")

    sweep = sub.add_parser("sweep", help="run solvers across a list of k values")
    sweep.add_argument("--graph", required=True)
    sweep.add_argument("--k-list", required=True,
                       help="comma-separated subgraph sizes, ascending")
    sweep.add_argument("--solvers", required=True,
                       help=f"comma-separated subset of {','.join(SOLVER_NAMES)}")
    sweep.add_argument("--out", required=True, help="report file to write")
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep.add_argument("--lambda", dest="loading", type=float, default=1.0)
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--jobs", type=int, default=None,
                       help="parallel sweep cells (default: $DKS_JOBS or CPU count)")

    verify = sub.add_parser("verify", help="run the theory property suites")
    verify.add_argument("--max-n", type=int, default=8,
                        help="largest graph size to include (default 8)")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--suite", choices=("all",) + tuple(SUITES),
                        default="all")

    score = sub.add_parser("score",
                           help="score an externally produced vertex selection")
    score.add_argument("--graph", required=True)
    score.add_argument("--selection", required=True,
                       help="file with one original vertex id per line")
    score.add_argument("--lambda", dest="loading", type=float, default=1.0)
    score.add_argument("--output", choices=("text", "json"), default="text")
    return parser


def _load_graph(path: str) -> Graph:
    try:
        return load_edge_list(path)
    except (OSError, ValueError, EOFError) as exc:
        print(f"dks: cannot load graph: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_IO) from exc


def _original_labels(g: Graph, vertices) -> list:
    return [int(g.original_ids[v]) for v in vertices]


def _selection_payload(g: Graph, args, rep) -> dict:
    sel = rep.selection
    return {
        "solver": rep.solver_name,
        "graph": args.graph,
        "n": g.n,
        "m": g.m,
        "k": sel.k,
        "lambda": float(format_float(args.loading)),
        "vertices": _original_labels(g, sel.vertices),
        "induced_edges": sel.induced_edges,
        "normalized_density": float(format_float(sel.normalized_density)),
        "objective": float(format_float(sel.objective_at_loading)),
        "iterations": rep.iterations,
        "converged": rep.converged,
        "integral_before_projection": rep.integral,
        "wall_time_s": rep.wall_time_s,
    }


def _print_payload(payload: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(payload, indent=2))
        return
    for key, value in payload.items():
        if key == "vertices":
            value = " ".join(str(v) for v in value)
        elif isinstance(value, float):
            value = format_float(value)
        elif isinstance(value, bool):
            value = "true" if value else "false"
        print(f"{key}: {value}")


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    if not 1 <= args.k <= g.n:
        print(f"dks: --k must be in [1, {g.n}], got {args.k}", file=sys.stderr)
        return EXIT_BAD_FLAGS
    if args.loading < 0:
        print("dks: --lambda must be nonnegative", file=sys.stderr)
        return EXIT_BAD_FLAGS
    from .graph import ProblemInstance

    inst = ProblemInstance(graph=g, k=args.k, loading=args.loading)
    fw_cfg = FwConfig(step_rule=args.step_rule,
                      max_iters=args.max_iters or 1000,
                      gap_tol=args.gap_tol)
    opt_cfg = OptimizerConfig(learning_rate=args.lr,
                              max_iters=args.max_iters or 200)
    try:
        rep = solve_with(args.solver, inst, fw_cfg=fw_cfg, opt_cfg=opt_cfg)
    except Exception as exc:  # noqa: BLE001 - reported as solver failure
        print(f"dks: solver failed: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    _print_payload(_selection_payload(g, args, rep), args.output)
    return EXIT_OK


def cmd_sweep(args) -> int:
    g = _load_graph(args.graph)
    try:
        ks = sorted(int(tok) for tok in args.k_list.split(",") if tok.strip())
    except ValueError:
        print(f"dks: --k-list must be comma-separated integers, got "
              f"{args.k_list!r}", file=sys.stderr)
        return EXIT_BAD_FLAGS
    solvers = [tok.strip() for tok in args.solvers.split(",") if tok.strip()]
    if not ks or not solvers:
        print("dks: --k-list and --solvers must be nonempty", file=sys.stderr)
        return EXIT_BAD_FLAGS
    for name in solvers:
        if name not in SOLVER_NAMES:
            print(f"dks: unknown solver {name!r}; choose from "
                  f"{','.join(SOLVER_NAMES)}", file=sys.stderr)
            return EXIT_BAD_FLAGS
    for k in ks:
        if not 1 <= k <= g.n:
            print(f"dks: k={k} outside [1, {g.n}]", file=sys.stderr)
            return EXIT_BAD_FLAGS
    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get("DKS_JOBS", 0)) or os.cpu_count() or 1
    try:
        records = run_sweep(g, args.loading, ks, solvers, seed=args.seed,
                            dataset=os.path.basename(args.graph), jobs=jobs)
    except Exception as exc:  # noqa: BLE001
        print(f"dks: sweep failed: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    try:
        write_report(records, args.out, fmt=args.format)
    except OSError as exc:
        print(f"dks: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(records)} records to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(names, max_n=args.max_n, seed=args.seed)
    all_passed = True
    for res in results:
        print(res.summary())
        all_passed = all_passed and res.passed
    return EXIT_OK if all_passed else EXIT_VERIFY_FAIL


def cmd_score(args) -> int:
    g = _load_graph(args.graph)
    try:
        labels = load_selection_file(args.selection)
    except (OSError, ValueError) as exc:
        print(f"dks: cannot load selection: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        record = score_selection(g, labels, loading=args.loading,
                                 dataset=os.path.basename(args.graph))
    except ValueError as exc:
        print(f"dks: invalid selection: {exc}", file=sys.stderr)
        return EXIT_IO
    payload = {
        "graph": args.graph,
        "selection": args.selection,
        "k": record.k,
        "lambda": float(format_float(record.loading)),
        "vertices": sorted(labels),
        "induced_edges": int(round((record.objective - record.loading * record.k) / 2.0)),
        "normalized_density": float(format_float(record.normalized_density)),
        "objective": float(format_float(record.objective)),
        "upper_bound": None if record.upper_bound is None
        else float(format_float(record.upper_bound)),
    }
    _print_payload(payload, args.output)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on flag errors and 0 on --help; pass both through.
        return int(exc.code or 0)
    handlers = {"solve": cmd_solve, "sweep": cmd_sweep,
                "verify": cmd_verify, "score": cmd_score}
    try:
        return handlers[args.command](args)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
