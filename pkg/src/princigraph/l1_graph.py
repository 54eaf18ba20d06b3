"""Sparse l1 graph learning over centroids.

The graph weights solve a linear program: minimise the edge-cost-weighted
sum of weights plus lam times the l1 error of reconstructing every centroid
from its neighbours.  One variable per allowed unordered pair keeps the
weight matrix symmetric by construction, and a pair of slack columns per
(dimension, vertex) absorbs the reconstruction error.  The slack columns
form a ready-made feasible basis (W = 0 reconstructs nothing), so the
simplex solver skips phase one.
"""

from dataclasses import dataclass

import numpy as np

from .model import squared_distances
from .simplex import solve_standard_form


@dataclass
class LpProblem:
    """Standard-form program for the l1 graph weights.

    Columns of A are ordered: one weight per pair in ``pairs``, then the
    positive slacks, then the negative slacks (one of each per constraint
    row).  ``basis`` indexes a feasible identity basis among the slacks.
    """

    A: np.ndarray
    b: np.ndarray
    c: np.ndarray
    basis: np.ndarray
    pairs: list
    n_vertices: int


def candidate_edges(X, nn):
    """Unordered pairs {i, j} where j is among the nn nearest neighbours of i, or vice versa.

    Args:
        X: D x N points from which neighbourhoods are computed.
        nn: neighbourhood size, 1 <= nn < N.

    Returns:
        Set of (i, j) tuples with i < j.
    """
    X = np.asarray(X, dtype=float)
    N = X.shape[1]
    if not 1 <= nn < N:
        raise ValueError(f"nn must be in [1, {N - 1}], got {nn}")
    d2 = squared_distances(X, X)
    np.fill_diagonal(d2, np.inf)
    near = np.argsort(d2, axis=1, kind="stable")[:, :nn]
    allowed = set()
    for i in range(N):
        for j in near[i]:
            allowed.add((min(i, int(j)), max(i, int(j))))
    return allowed


def complete_edges(K):
    """All unordered pairs on K vertices."""
    return {(i, j) for i in range(K) for j in range(i + 1, K)}


def build_lp(phi, C, lam, candidates):
    """Assemble the weight-learning LP for the given costs and centroids.

    Args:
        phi: K x K symmetric edge costs.
        C: D x K centroid matrix (reconstruction targets).
        lam: nonnegative weight of the reconstruction error.
        candidates: allowed unordered pairs, e.g. from candidate_edges.

    Returns:
        LpProblem with |candidates| + 2 D K variables and D K equality rows.
    """
    phi = np.asarray(phi, dtype=float)
    C = np.asarray(C, dtype=float)
    D, K = C.shape
    pairs = sorted((min(i, j), max(i, j)) for i, j in candidates)
    if any(i == j or i < 0 or j >= K for i, j in pairs):
        raise ValueError("candidate pairs must join two distinct vertices")
    n_pairs = len(pairs)
    R = D * K  # one row per (vertex, dimension)

    A = np.zeros((R, n_pairs + 2 * R))
    for p, (i, j) in enumerate(pairs):
        A[i * D : (i + 1) * D, p] = C[:, j]
        A[j * D : (j + 1) * D, p] = C[:, i]
    A[:, n_pairs : n_pairs + R] = np.eye(R)
    A[:, n_pairs + R :] = -np.eye(R)

    b = C.T.reshape(-1)
    c = np.concatenate(
        [np.array([2.0 * phi[i, j] for i, j in pairs]), np.full(2 * R, float(lam))]
    )
    rows = np.arange(R)
    basis = np.where(b >= 0.0, n_pairs + rows, n_pairs + R + rows)
    return LpProblem(A, b, c, basis, pairs, K)


def solve_lp(problem, tol=1e-9, basis=None, with_basis=False):
    """Optimal symmetric weight matrix of an LpProblem.

    Optimality is certified by the solver (reduced costs >= -tol against the
    original constraint data).

    Args:
        problem: LpProblem from build_lp.
        tol: reduced-cost tolerance.
        basis: optional warm-start basis from a previous solve of a problem
            with the same candidate pairs; ignored when its length does not
            match the row count.
        with_basis: when true, also return the optimal basis for reuse.
    """
    start = problem.basis
    if basis is not None and len(basis) == problem.A.shape[0]:
        start = basis
    sol = solve_standard_form(problem.A, problem.b, problem.c, basis=start, tol=tol)
    K = problem.n_vertices
    W = np.zeros((K, K))
    for p, (i, j) in enumerate(problem.pairs):
        W[i, j] = W[j, i] = sol.x[p]
    if with_basis:
        return W, sol.basis
    return W
