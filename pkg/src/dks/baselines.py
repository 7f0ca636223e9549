"""Baseline selection heuristics and the spectral density upper bound.

Two classic constructions to compare the solvers against — the
half-degrees greedy procedure and the leading-eigenvector (rank-1)
selection — plus a certificate: an upper bound on the normalized density
of any k-subgraph built from the top two singular values of the
adjacency matrix.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph
from .linalg import leading_eigenpair, top_two_singular_values
from .rounding import VertexSelection, make_selection
from .topk import indicator, top_k_indices


def greedy_feige(g: Graph, k: int, loading: float = 1.0) -> VertexSelection:
    """Half max-degree core plus best-attached complement.

    Picks H = ceil(k/2) vertices of maximum degree, then fills the
    remaining k - |H| slots with the vertices outside H that have the
    most neighbors inside H.  All ties go to the lowest index.
    """
    if not 2 <= k <= g.n:
        raise ValueError(f"k={k} outside [2, {g.n}]")
    h_size = (k + 1) // 2
    core = top_k_indices(g.degrees, h_size)
    attached = g.matrix.dot(indicator(core, g.n))
    attached[core] = -1.0  # exclude the core from the second phase
    rest = top_k_indices(attached, k - h_size)
    return make_selection(g, np.concatenate([core, rest]), loading)


def rank1_lrbo(g: Graph, k: int, loading: float = 1.0,
               tol: float = 1e-10, max_iters: int = 20000) -> VertexSelection:
    """Top-k entries of the leading adjacency eigenvector.

    The rank-1 surrogate objective x^T (theta1 u1 u1^T) x over 0/1
    sum-to-k vectors is maximized by the k largest entries of u1 (sign
    flipped so its largest-magnitude entry is positive).  On a
    disconnected graph u1 concentrates on the dominant component and the
    selection follows it; that is the documented behavior, not an error.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} outside [1, {g.n}]")
    u1 = leading_eigenpair(g, tol=tol, max_iters=max_iters).vector
    return make_selection(g, top_k_indices(u1, k), loading)


def density_upper_bound(g: Graph, k: int, eig=None,
                        tol: float = 1e-12, max_iters: int = 20000) -> float:
    """Certified upper bound on the normalized density of any k-subgraph.

    Returns min of three terms: the trivial cap 1; the rank-1 surrogate
    density of the top-k eigenvector selection plus a sigma2 correction,
    theta1 * (sum of u1 over the selection)^2 / (k(k-1)) + sigma2/(k-1);
    and sigma1/(k-1).  ``eig`` may pass a precomputed
    (sigma1, u1, sigma2) triple to amortize the eigensolves across many
    values of k.  Tolerances default much tighter than elsewhere because
    the bound is an inequality certificate, not a step-size heuristic.

    The iterative eigenvalue estimates converge from below, so plugging
    them in verbatim could undercut the true bound by an ulp and break
    the >= guarantee exactly when the bound is tight (e.g. a single
    edge, k=2, where sigma1/(k-1) and the true density are both 1).  Two
    corrections make the evaluation one-sided:

    * Residual shift: for a symmetric matrix the leading eigenvalue lies
      within ||A u - theta u|| of the Rayleigh quotient once the
      iteration has locked onto the Perron direction, so theta +
      residual over-estimates theta1.  The sigma2 term gets the same
      allowance to absorb the error the approximate deflation
      introduces.
    * Rounding guard: the Rayleigh dot product itself carries a forward
      rounding error of order (n + maxdeg) * eps * theta that the
      residual cannot see (the computed u can be an exact eigenvector
      while fl(u'Au) still rounds below the true eigenvalue), so every
      eigenvalue-derived term is inflated by that standard relative
      error bound.
    """
    if k < 2:
        raise ValueError("the density bound needs k >= 2")
    if k > g.n:
        raise ValueError(f"k={k} exceeds n={g.n}")
    if eig is None:
        eig = top_two_singular_values(g, tol=tol, max_iters=max_iters)
    _, u1, sigma2 = eig
    au = g.matrix.dot(u1)
    theta = float(u1 @ au)
    residual = float(np.linalg.norm(au - theta * u1))
    maxdeg = float(g.degrees.max()) if g.n else 0.0
    guard = 1.0 + (g.n + maxdeg + 16.0) * np.finfo(np.float64).eps
    theta_cert = (theta + residual) * guard
    sigma1_cert = max(theta_cert, 0.0)
    sigma2_cert = (sigma2 + 4.0 * residual) * guard
    sel = top_k_indices(u1, k)
    surrogate = sigma1_cert * float(u1[sel].sum()) ** 2 / (k * (k - 1))
    term2 = (surrogate + sigma2_cert / (k - 1)) * guard
    term3 = sigma1_cert / (k - 1) * guard
    return float(min(1.0, term2, term3))
