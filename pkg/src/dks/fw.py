"""Frank-Wolfe solver for the relaxed densest-k-subgraph problem.

Maximizes x^T(A + loading*I)x over the polytope {x in [0,1]^n : sum x = k}.
The linear maximization step is a top-k selection on the gradient, so one
iteration costs O(m + n).  Two step-size rules are provided: "option1"
(curvature-safeguarded exact ratio, monotone ascent) and "option2" (the
simpler 2kL denominator).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import ProblemInstance
from .linalg import loaded_matvec, spectral_norm
from .points import is_feasible, uniform_point
from .rounding import VertexSelection, project_top_k
from .topk import indicator, top_k_indices

STEP_RULES = ("option1", "option2")


class SolverError(RuntimeError):
    """A solver detected an internal inconsistency or diverged."""


@dataclass
class FwConfig:
    """Knobs for fw_solve.

    ``gap_tol=None`` uses the adaptive default 1e-8 * (1 + |objective|);
    an explicit value is treated as an absolute gap threshold.
    """

    step_rule: str = "option1"
    max_iters: int = 1000
    gap_tol: Optional[float] = None

    def __post_init__(self):
        if self.step_rule not in STEP_RULES:
            raise ValueError(f"step_rule must be one of {STEP_RULES}")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if self.gap_tol is not None and self.gap_tol < 0:
            raise ValueError("gap_tol must be nonnegative")


@dataclass
class SolveReport:
    """What a solve run produced, for reporting and comparison."""

    solver_name: str
    objective_trace: np.ndarray
    iterations: int
    converged: bool
    integral: bool
    final_point: np.ndarray
    selection: VertexSelection
    wall_time_s: float
    fw_gap: float = field(default=float("nan"))


def objective(inst: ProblemInstance, x) -> float:
    """x^T A x + loading*||x||^2, each edge contributing twice."""
    x = np.asarray(x, dtype=np.float64)
    return float(x @ loaded_matvec(inst.graph, inst.loading, x))


def lmp_top_k(gradient, k: int) -> np.ndarray:
    """Maximize the linearized objective over the polytope: a 0/1 top-k vertex."""
    gradient = np.asarray(gradient, dtype=np.float64)
    return indicator(top_k_indices(gradient, k), len(gradient))


def is_integral(x, tol: float = 1e-9) -> bool:
    x = np.asarray(x, dtype=np.float64)
    return bool(np.all(np.abs(x - np.round(x)) <= tol))


def fw_solve(inst: ProblemInstance, cfg: FwConfig = None, x0=None,
             validate_iterates: bool = False, lipschitz: float = None) -> SolveReport:
    """Run Frank-Wolfe from x0 (default: the uniform point k/n).

    Stops when the Frank-Wolfe gap grad.(s - x) falls below the tolerance
    (a first-order stationarity certificate; a vertex whose top-k map
    returns itself stops immediately) or when the iteration budget runs
    out.  The reported selection is always the top-k projection of the
    final point, whether or not that point is integral.  ``lipschitz``
    overrides the power-iteration estimate of ||A + loading*I||_2 (useful
    for multi-start runs that share one estimate).
    """
    t_start = time.perf_counter()
    cfg = cfg or FwConfig()
    g, k, lam = inst.graph, inst.k, inst.loading
    if x0 is None:
        x = uniform_point(g.n, k)
    else:
        x = np.asarray(x0, dtype=np.float64).copy()
        if not is_feasible(x, k, tol=1e-9):
            raise ValueError("x0 is not feasible for the box-and-sum polytope")

    lips = spectral_norm(g, lam).value if lipschitz is None else float(lipschitz)
    trace = []
    iterations = 0
    converged = False
    gap = float("nan")

    for t in range(cfg.max_iters + 1):
        grad = loaded_matvec(g, lam, x)
        val = float(x @ grad)
        trace.append(val)
        s = lmp_top_k(grad, k)
        d = s - x
        gap = float(grad @ d)
        if gap < -1e-9 * (1.0 + abs(val)):
            raise SolverError(f"negative FW gap {gap}: top-k LMP is inconsistent")
        gap = max(gap, 0.0)
        tol_t = cfg.gap_tol if cfg.gap_tol is not None else 1e-8 * (1.0 + abs(val))
        if gap <= tol_t:
            converged = True
            break
        if t == cfg.max_iters:
            break
        if lips <= 0.0:
            raise SolverError("nonpositive Lipschitz estimate with nonzero gradient")
        dnorm2 = float(d @ d)
        if cfg.step_rule == "option1":
            gamma = min(1.0, gap / (lips * dnorm2))
        else:
            gamma = min(1.0, gap / (2.0 * k * lips))
        x = x + gamma * d
        iterations += 1
        if validate_iterates and not is_feasible(x, k, tol=1e-9):
            raise SolverError(f"iterate {iterations} left the feasible polytope")

    return SolveReport(
        solver_name=f"fw-{cfg.step_rule}",
        objective_trace=np.asarray(trace),
        iterations=iterations,
        converged=converged,
        integral=is_integral(x) and is_feasible(x, k, tol=1e-9),
        final_point=x,
        selection=project_top_k(g, x, k, lam),
        wall_time_s=time.perf_counter() - t_start,
        fw_gap=gap,
    )


def fw_multi_start(inst: ProblemInstance, cfg: FwConfig = None,
                   perturbation: float = 0.5):
    """Default start plus one start nudged toward each vertex.

    Yields the SolveReport of the uniform start followed by n runs whose
    starts are the projection of uniform + perturbation*e_j back onto the
    polytope.  Useful on symmetric instances where the uniform point is
    already first-order stationary.
    """
    from .points import project_capped_simplex

    g, k = inst.graph, inst.k
    lips = spectral_norm(g, inst.loading).value
    yield fw_solve(inst, cfg, lipschitz=lips)
    base = uniform_point(g.n, k)
    for j in range(g.n):
        bumped = base.copy()
        bumped[j] += perturbation
        yield fw_solve(inst, cfg, x0=project_capped_simplex(bumped, k),
                       lipschitz=lips)
