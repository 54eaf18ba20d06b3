"""Alternating fit of centroids, assignments and graph structure.

Each pass updates the blocks in a fixed order -- edge costs from the current
centroids, soft assignments, graph weights (spanning tree or l1 program),
then the closed-form centroid solve -- and records the objective.  The loop
stops when the relative objective change falls under ``params.tol``.
"""

from dataclasses import dataclass, field

import numpy as np

from .centroids import update_centroids
from .grouping import update_assignments
from .l1_graph import build_lp, candidate_edges, solve_lp
from .model import L1_GRAPH, cost_matrix, objective
from .spanning_tree import kruskal_mst

_LP_TOL = 1e-9


@dataclass
class FitResult:
    """Outcome of a principal-graph fit.

    Attributes:
        centroids: D x K fitted centroid matrix.
        weights: K x K symmetric graph weight matrix.
        assignments: N x K row-stochastic soft assignments.
        objective_trace: objective value after every completed pass.
        iterations: number of passes executed.
        converged: whether the relative change dropped below tol before
            max_iters ran out.
    """

    centroids: np.ndarray
    weights: np.ndarray
    assignments: np.ndarray
    objective_trace: list = field(default_factory=list)
    iterations: int = 0
    converged: bool = False


def _validate_data(X):
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[1] < 1:
        raise ValueError("data must be a D x N matrix with at least one column")
    if not np.isfinite(X).all():
        raise ValueError("data contains non-finite values")
    return X


def _alternate(X, C, params):
    """Run the block updates from initial centroids C until convergence."""
    candidates = None
    if params.structure == L1_GRAPH:
        candidates = candidate_edges(C, params.nn)
    trace = []
    converged = False
    W = np.zeros((C.shape[1], C.shape[1]))
    P = None
    warm = None  # optimal basis of the previous pass's program
    for _ in range(params.max_iters):
        phi = cost_matrix(C)
        P = update_assignments(X, C, params.sigma)
        if params.structure == L1_GRAPH:
            problem = build_lp(phi, C, params.lam, candidates)
            W, warm = solve_lp(problem, tol=_LP_TOL, basis=warm, with_basis=True)
        else:
            W = kruskal_mst(phi)
        C = update_centroids(X, P, W, params.gamma)
        value = objective(X, C, W, P, params)
        trace.append(value)
        if len(trace) >= 2:
            prev = trace[-2]
            if abs(value - prev) / max(abs(prev), 1e-12) < params.tol:
                converged = True
                break
    return FitResult(C, W, P, trace, len(trace), converged)


def fit(X, params):
    """Fit a principal graph with one centroid per data point.

    Args:
        X: D x N finite data matrix.
        params: FitParams.

    Returns:
        FitResult; centroids start at the data points themselves.
    """
    X = _validate_data(X)
    return _alternate(X, X.copy(), params)


def fit_landmarks(X, params, n_landmarks):
    """Fit a principal graph over k-means landmarks instead of all points.

    Args:
        X: D x N finite data matrix.
        params: FitParams (its seed drives the k-means initialisation).
        n_landmarks: number of landmark centroids, 2 <= n_landmarks <= N.

    Returns:
        FitResult with K = n_landmarks centroids and N x K assignments.
    """
    X = _validate_data(X)
    N = X.shape[1]
    if not 2 <= n_landmarks <= N:
        raise ValueError(f"n_landmarks must be in [2, {N}], got {n_landmarks}")
    Z = kmeans(X, n_landmarks, params.seed)
    return _alternate(X, Z, params)


def _cluster_means(X, labels, K):
    C = np.zeros((X.shape[0], K))
    for k in range(K):
        members = labels == k
        C[:, k] = X[:, members].mean(axis=1)
    return C


def _reseed_empty(X, labels, K):
    """Give each empty cluster the point farthest from its current centroid."""
    labels = labels.copy()
    while True:
        counts = np.bincount(labels, minlength=K)
        empty = np.nonzero(counts == 0)[0]
        if empty.size == 0:
            return labels
        C = np.zeros((X.shape[0], K))
        for k in np.nonzero(counts > 0)[0]:
            C[:, k] = X[:, labels == k].mean(axis=1)
        gaps = np.einsum("dn,dn->n", X - C[:, labels], X - C[:, labels])
        labels[int(np.argmax(gaps))] = int(empty[0])


def _lloyd(X, labels, K, max_iters=100):
    """Lloyd iterations from an initial labelling; returns (C, labels, wcss history)."""
    history = []
    for _ in range(max_iters):
        labels = _reseed_empty(X, labels, K)
        C = _cluster_means(X, labels, K)
        diff = X - C[:, labels]
        history.append(float(np.einsum("dn,dn->", diff, diff)))
        d2 = (
            np.einsum("dn,dn->n", X, X)[:, None]
            + np.einsum("dk,dk->k", C, C)[None, :]
            - 2.0 * (X.T @ C)
        )
        new = np.argmin(d2, axis=1)
        if np.array_equal(new, labels):
            break
        labels = new
    return C, labels, history


def kmeans(X, K, seed):
    """Deterministic seeded k-means (random partition init + Lloyd).

    Empty clusters are re-seeded from the point farthest from its assigned
    centroid, so every cluster ends up nonempty; with K = N each point
    becomes its own centroid.

    Args:
        X: D x N data matrix.
        K: number of clusters, 1 <= K <= N.
        seed: RNG seed for the initial random partition.

    Returns:
        D x K centroid matrix.
    """
    X = _validate_data(X)
    N = X.shape[1]
    if not 1 <= K <= N:
        raise ValueError(f"K must be in [1, {N}], got {K}")
    rng = np.random.default_rng(seed)
    labels = rng.integers(0, K, size=N)
    C, _, _ = _lloyd(X, labels, K)
    return C


def majority_labels(P, labels):
    """Per-centroid majority vote of ground-truth point labels.

    Points vote for the centroid of their hard assignment (row argmax, ties
    to the lowest index).  Centroids with no points get label -1; vote ties
    resolve to the smallest label.

    Args:
        P: N x K assignment matrix.
        labels: length-N integer array of nonnegative ground-truth labels.

    Returns:
        Length-K integer array of centroid labels.
    """
    P = np.asarray(P, dtype=float)
    labels = np.asarray(labels, dtype=int)
    if (labels < 0).any():
        raise ValueError("ground-truth labels must be nonnegative")
    hard = np.argmax(P, axis=1)
    K = P.shape[1]
    out = np.full(K, -1, dtype=int)
    for k in range(K):
        votes = labels[hard == k]
        if votes.size:
            out[k] = int(np.argmax(np.bincount(votes)))
    return out
