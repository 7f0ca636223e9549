"""Feasible points of the box-and-sum polytope {x in [0,1]^n : sum x = k}."""

from __future__ import annotations

import numpy as np


def uniform_point(n: int, k: int) -> np.ndarray:
    """The fully symmetric feasible point x_i = k/n."""
    return np.full(n, k / n, dtype=np.float64)


def is_feasible(x, k: int, tol: float = 1e-9) -> bool:
    x = np.asarray(x, dtype=np.float64)
    return (x.min() >= -tol and x.max() <= 1.0 + tol
            and abs(float(x.sum()) - k) <= tol * max(1.0, k))


def project_capped_simplex(u, k: int, tol: float = 1e-12) -> np.ndarray:
    """Euclidean projection of ``u`` onto {x in [0,1]^n : sum x = k}.

    The projection has the form clip(u - tau, 0, 1) for a scalar shift tau;
    we find tau by bisection on the monotone map tau -> sum(clip(u - tau)).
    """
    u = np.asarray(u, dtype=np.float64)
    n = u.shape[0]
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside [0, {n}]")
    lo, hi = u.min() - 1.0, u.max()
    for _ in range(100):
        tau = 0.5 * (lo + hi)
        s = np.clip(u - tau, 0.0, 1.0).sum()
        if abs(s - k) <= tol:
            break
        if s > k:
            lo = tau
        else:
            hi = tau
    return np.clip(u - tau, 0.0, 1.0)


def random_feasible_point(n: int, k: int, rng: np.random.Generator) -> np.ndarray:
    """A random interior-ish feasible point: project uniform noise onto the set."""
    return project_capped_simplex(rng.random(n) * 2.0, k)
