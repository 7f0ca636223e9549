"""Sparse linear-algebra kernels for the loaded quadratic objective.

Everything here runs in O(m + n) per pass over the graph: the loaded
mat-vec (A + loading*I)x, the quadratic form x^T(A + loading*I)x, and
power-iteration estimates of the spectral quantities the solvers and the
density bound need (spectral norm, leading eigenpair, second singular
value via deflation).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph


def loaded_matvec(g: Graph, loading: float, x: np.ndarray) -> np.ndarray:
    """Compute (A + loading*I) x in one pass over the adjacency.

    This is also the half-gradient of the quadratic objective: the true
    gradient of x^T(A + loading*I)x is twice this vector.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({g.n},)")
    return g.matrix.dot(x) + loading * x


def quadratic_form(g: Graph, loading: float, x: np.ndarray) -> float:
    """The objective x^T A x + loading*||x||^2 (each edge counted twice)."""
    x = np.asarray(x, dtype=np.float64)
    return float(x @ loaded_matvec(g, loading, x))


@dataclass
class PowerResult:
    """Outcome of a power-iteration estimate.

    ``value`` is the spectral estimate, ``vector`` the final unit iterate,
    ``converged`` whether successive estimates settled within tolerance.
    An unconverged result is still the best available estimate, not an
    error (callers use it as a step-size safeguard).
    """

    value: float
    vector: np.ndarray
    converged: bool


def _power_norm(apply_op, n: int, tol: float, max_iters: int, seed: int = 0,
                zero_scale: float = 1.0, start=None) -> PowerResult:
    """Largest singular value of a symmetric operator by power iteration.

    The estimate at step t is ||M x_t|| for the unit iterate x_t; for
    symmetric M this sequence is nondecreasing and converges to the
    spectral norm even when the extreme eigenvalues come in a +/- pair
    (where the Rayleigh quotient of the iterates would stall).  Starts
    from the normalized all-ones vector for determinism; if the estimate
    stagnates at numerical zero relative to ``zero_scale`` (the start was
    annihilated, leaving only roundoff noise), restarts from a seeded
    random vector before concluding the operator is null.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    null_tol = 1e-12 * zero_scale
    if start is None:
        x = np.full(n, 1.0 / np.sqrt(n))
    else:
        x = np.asarray(start, dtype=np.float64)
        x = x / float(np.linalg.norm(x))
    prev = None
    restarts = 0
    sigma = 0.0
    converged = False
    for _ in range(max_iters):
        y = apply_op(x)
        sigma = float(np.linalg.norm(y))
        if sigma <= null_tol:
            if restarts >= 2:
                return PowerResult(value=0.0, vector=x, converged=True)
            rng = np.random.default_rng([seed, restarts])
            x = rng.standard_normal(n)
            x /= np.linalg.norm(x)
            prev = None
            restarts += 1
            continue
        x = y / sigma
        if prev is not None and abs(sigma - prev) <= tol * max(1.0, sigma):
            converged = True
            break
        prev = sigma
    return PowerResult(value=sigma, vector=x, converged=converged)


def spectral_norm(g: Graph, loading: float, tol: float = 1e-6,
                  max_iters: int = 1000) -> PowerResult:
    """Estimate ||A + loading*I||_2 by power iteration.

    For loading >= 0 the matrix is entrywise nonnegative, so the spectral
    norm equals its largest eigenvalue; the norm-growth estimate used here
    additionally copes with the loading = 0 bipartite case where the
    extreme eigenvalues are a +/- pair.
    """
    scale = float(g.degrees.max(initial=0)) + abs(loading)
    return _power_norm(lambda v: loaded_matvec(g, loading, v), g.n, tol,
                       max_iters, zero_scale=scale)


def leading_eigenpair(g: Graph, tol: float = 1e-6,
                      max_iters: int = 1000) -> PowerResult:
    """Leading (Perron) eigenpair of the adjacency matrix A.

    Power iteration runs on A + I so the target eigenvalue is strictly
    dominant in magnitude even on bipartite graphs, starting from the
    all-ones vector (which always overlaps the nonnegative Perron
    direction).  Convergence is judged on the eigen-residual
    ||A u - theta u||, not on the value estimate: the value settles
    quadratically faster than the vector, and downstream deflation needs
    the vector itself to be accurate.  The vector is sign-normalized so
    its largest-magnitude entry is positive.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    x = np.full(g.n, 1.0 / np.sqrt(g.n))
    theta = 0.0
    converged = False
    for _ in range(max_iters):
        y = g.matrix.dot(x) + x
        ax = y - x  # A x, reusing the shifted product
        theta = float(x @ ax)
        residual = float(np.linalg.norm(ax - theta * x))
        if residual <= tol * max(1.0, abs(theta)):
            converged = True
            break
        x = y / float(np.linalg.norm(y))
    if x[np.argmax(np.abs(x))] < 0:
        x = -x
    return PowerResult(value=theta, vector=x, converged=converged)


def top_two_singular_values(g: Graph, tol: float = 1e-6,
                            max_iters: int = 1000):
    """(sigma1, u1, sigma2) of the adjacency matrix A.

    sigma1 and u1 come from the leading eigenpair (for a nonnegative
    symmetric matrix the top singular value is the Perron eigenvalue);
    sigma2 is the spectral norm of the deflated operator
    x -> Ax - theta1 * u1 (u1^T x), estimated by a second power iteration
    with a seeded random restart when the all-ones start is annihilated.
    """
    lead = leading_eigenpair(g, tol=tol, max_iters=max_iters)
    theta1, u1 = lead.value, lead.vector
    sigma1 = max(theta1, 0.0)

    def deflated(v):
        return g.matrix.dot(v) - theta1 * u1 * float(u1 @ v)

    # The all-ones start can be exactly orthogonal to the dominant
    # eigenvector of the deflated operator (bipartite graphs with a
    # part-swapping symmetry), and the iteration preserves that
    # orthogonality forever.  Run a seeded random start as well and keep
    # the larger estimate; norm-growth estimates never overshoot.
    scale = max(sigma1, float(g.degrees.max(initial=0)))
    second = _power_norm(deflated, g.n, tol, max_iters, seed=1,
                         zero_scale=scale)
    rng = np.random.default_rng(1)
    z0 = rng.standard_normal(g.n)
    alt = _power_norm(deflated, g.n, tol, max_iters, seed=2,
                      zero_scale=scale, start=z0)
    sigma2 = max(second.value, alt.value)
    return sigma1, u1, sigma2
