"""Experiment records, density/time sweeps, and CSV/JSON serialization.

A sweep runs each requested solver at each requested subgraph size,
attaches the spectral density upper bound per size, and emits records
with a fixed column order.  Floats are serialized with 12 significant
digits; a failed solver produces a record with status "failed" and null
metrics instead of aborting the sweep.
"""

from __future__ import annotations

import csv
import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .baselines import density_upper_bound, greedy_feige, rank1_lrbo
from .fw import FwConfig, SolveReport, fw_solve
from .graph import Graph, ProblemInstance
from .linalg import top_two_singular_values
from .param import OptimizerConfig, param_solve
from .rounding import make_selection

SOLVER_NAMES = ("fw", "param", "greedy", "rank1")

# Serialized field order; "lambda" is the wire name of the loading field.
FIELD_ORDER = ("dataset", "n", "m", "k", "lambda", "solver",
               "normalized_density", "objective", "iterations",
               "wall_time_s", "integral_before_projection", "upper_bound",
               "status")


@dataclass
class ExperimentRecord:
    """One (dataset, solver, k) cell of a sweep."""

    dataset: str
    n: int
    m: int
    k: int
    loading: float
    solver: str
    normalized_density: Optional[float]
    objective: Optional[float]
    iterations: Optional[int]
    wall_time_s: Optional[float]
    integral_before_projection: Optional[bool]
    upper_bound: Optional[float]
    status: str = "ok"

    def as_dict(self) -> dict:
        return {
            "dataset": self.dataset, "n": self.n, "m": self.m, "k": self.k,
            "lambda": self.loading, "solver": self.solver,
            "normalized_density": self.normalized_density,
            "objective": self.objective, "iterations": self.iterations,
            "wall_time_s": self.wall_time_s,
            "integral_before_projection": self.integral_before_projection,
            "upper_bound": self.upper_bound, "status": self.status,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentRecord":
        return cls(
            dataset=str(d["dataset"]), n=int(d["n"]), m=int(d["m"]),
            k=int(d["k"]), loading=float(d["lambda"]), solver=str(d["solver"]),
            normalized_density=_opt_float(d["normalized_density"]),
            objective=_opt_float(d["objective"]),
            iterations=_opt_int(d["iterations"]),
            wall_time_s=_opt_float(d["wall_time_s"]),
            integral_before_projection=_opt_bool(d["integral_before_projection"]),
            upper_bound=_opt_float(d["upper_bound"]),
            status=str(d["status"]),
        )


def _opt_float(v):
    if v is None or v == "":
        return None
    return float(v)


def _opt_int(v):
    if v is None or v == "":
        return None
    return int(v)


def _opt_bool(v):
    if v is None or v == "":
        return None
    if isinstance(v, bool):
        return v
    return str(v).strip().lower() == "true"


def format_float(v: float) -> str:
    """12-significant-digit decimal form used in every serialized float."""
    return f"{v:.12g}"


def solve_with(name: str, inst: ProblemInstance, fw_cfg: FwConfig = None,
               opt_cfg: OptimizerConfig = None) -> SolveReport:
    """Dispatch a solver by name onto a common SolveReport shape."""
    if name == "fw":
        return fw_solve(inst, fw_cfg)
    if name == "param":
        return param_solve(inst, opt_cfg)
    if name in ("greedy", "rank1"):
        t0 = time.perf_counter()
        if name == "greedy":
            sel = greedy_feige(inst.graph, inst.k, inst.loading)
        else:
            sel = rank1_lrbo(inst.graph, inst.k, inst.loading)
        x = np.zeros(inst.graph.n)
        x[sel.vertices] = 1.0
        return SolveReport(
            solver_name=name, objective_trace=np.array([sel.objective_at_loading]),
            iterations=0, converged=True, integral=True, final_point=x,
            selection=sel, wall_time_s=time.perf_counter() - t0)
    raise ValueError(f"unknown solver {name!r}; choose from {SOLVER_NAMES}")


def run_sweep(g: Graph, loading: float, k_values, solver_names, seed: int = 0,
              dataset: str = "graph", jobs: int = 1,
              fw_cfg: FwConfig = None, opt_cfg: OptimizerConfig = None):
    """Run every solver at every k; returns sorted ExperimentRecords.

    ``k_values`` must be ascending and within [1, n]; unknown solver
    names are rejected up front.  A failing solver yields a "failed"
    record and the sweep continues.  Densities and iteration counts are
    reproducible for a fixed seed; timings of course are not.
    """
    ks = [int(k) for k in k_values]
    if ks != sorted(ks):
        raise ValueError("k values must be sorted ascending")
    for k in ks:
        if not 1 <= k <= g.n:
            raise ValueError(f"k={k} outside [1, {g.n}]")
    for name in solver_names:
        if name not in SOLVER_NAMES:
            raise ValueError(f"unknown solver {name!r}; choose from {SOLVER_NAMES}")

    eig = top_two_singular_values(g, tol=1e-12, max_iters=20000)
    bounds = {k: (density_upper_bound(g, k, eig=eig) if k >= 2 else None)
              for k in ks}

    def run_cell(cell):
        k, solver = cell
        inst = ProblemInstance(graph=g, k=k, loading=loading)
        try:
            rep = solve_with(solver, inst, fw_cfg=fw_cfg, opt_cfg=opt_cfg)
            sel = rep.selection
            return ExperimentRecord(
                dataset=dataset, n=g.n, m=g.m, k=k, loading=loading,
                solver=solver, normalized_density=sel.normalized_density,
                objective=sel.objective_at_loading, iterations=rep.iterations,
                wall_time_s=rep.wall_time_s,
                integral_before_projection=rep.integral,
                upper_bound=bounds[k], status="ok")
        except Exception as exc:  # noqa: BLE001 - sweep must survive a cell
            return ExperimentRecord(
                dataset=dataset, n=g.n, m=g.m, k=k, loading=loading,
                solver=solver, normalized_density=None, objective=None,
                iterations=None, wall_time_s=None,
                integral_before_projection=None, upper_bound=bounds[k],
                status=f"failed: {exc}")

    cells = [(k, s) for k in ks for s in solver_names]
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(run_cell, cells))
    else:
        records = [run_cell(c) for c in cells]
    records.sort(key=lambda r: (r.dataset, r.solver, r.k))
    return records


def score_selection(g: Graph, vertex_labels, loading: float = 1.0,
                    dataset: str = "graph",
                    solver: str = "external") -> ExperimentRecord:
    """Score an externally produced selection (original vertex labels)."""
    idx = g.index_of(vertex_labels)
    if len(np.unique(idx)) != len(idx):
        raise ValueError("selection file repeats a vertex")
    sel = make_selection(g, idx, loading)
    k = len(idx)
    bound = density_upper_bound(g, k) if k >= 2 else None
    return ExperimentRecord(
        dataset=dataset, n=g.n, m=g.m, k=k, loading=loading, solver=solver,
        normalized_density=sel.normalized_density,
        objective=sel.objective_at_loading, iterations=0, wall_time_s=0.0,
        integral_before_projection=True, upper_bound=bound, status="ok")


def load_selection_file(path) -> list:
    """Read one vertex id per line ('#' comments and blanks skipped)."""
    labels = []
    with open(path, "rt", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                labels.append(int(line))
            except ValueError:
                raise ValueError(
                    f"{path}:{lineno}: expected one integer vertex id") from None
    if not labels:
        raise ValueError(f"{path}: no vertex ids found")
    return labels


def _cell_value(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format_float(v)
    return str(v)


def write_report(records, path, fmt: str = None) -> None:
    """Serialize records to CSV (header + rows) or a JSON array.

    When ``fmt`` is omitted it is inferred from the file extension, the
    same rule read_report uses.
    """
    records = list(records)
    if not records:
        raise ValueError("no records to write")
    if fmt is None:
        fmt = "json" if str(path).endswith(".json") else "csv"
    if fmt == "csv":
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(FIELD_ORDER)
            for rec in records:
                d = rec.as_dict()
                writer.writerow([_cell_value(d[f]) for f in FIELD_ORDER])
    elif fmt == "json":
        payload = []
        for rec in records:
            d = rec.as_dict()
            out = {}
            for f in FIELD_ORDER:
                v = d[f]
                if isinstance(v, float) and math.isfinite(v):
                    v = float(format_float(v))
                out[f] = v
            payload.append(out)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    else:
        raise ValueError(f"unknown report format {fmt!r}")


def read_report(path, fmt: str = None):
    """Parse a report written by write_report back into records."""
    if fmt is None:
        fmt = "json" if str(path).endswith(".json") else "csv"
    if fmt == "csv":
        with open(path, "r", newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            return [ExperimentRecord.from_dict(row) for row in reader]
    if fmt == "json":
        with open(path, "r", encoding="utf-8") as fh:
            return [ExperimentRecord.from_dict(d) for d in json.load(fh)]
    raise ValueError(f"unknown report format {fmt!r}")
