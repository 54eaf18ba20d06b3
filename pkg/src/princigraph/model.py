"""Shared machinery for principal-graph fitting.

Data and centroid matrices are column-major throughout: a D x N array holds
one point per column.  The fitting objective couples three blocks -- graph
weights W, centroids C and soft assignments P -- and every learner touches it
through the helpers below.
"""

from dataclasses import dataclass

import numpy as np

SPANNING_TREE = "spanning-tree"
L1_GRAPH = "l1-graph"
STRUCTURES = (SPANNING_TREE, L1_GRAPH)


@dataclass(frozen=True)
class FitParams:
    """Hyper-parameters of a principal-graph fit.

    Attributes:
        sigma: bandwidth of the soft-assignment kernel (> 0).
        gamma: weight of the data-fit term (> 0).
        lam: weight of the l1 reconstruction term; only used by the
            ``l1-graph`` structure (> 0).
        nn: neighbourhood size for candidate edges of the l1 graph.
        tol: relative objective change that counts as converged.
        max_iters: hard cap on alternating iterations.
        structure: ``spanning-tree`` or ``l1-graph``.
        seed: seed for any randomised initialisation (landmark k-means).
    """

    sigma: float
    gamma: float
    lam: float = 1.0
    nn: int = 5
    tol: float = 1e-5
    max_iters: int = 100
    structure: str = SPANNING_TREE
    seed: int = 0

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")
        if self.lam <= 0:
            raise ValueError("lam must be positive")
        if self.nn < 1:
            raise ValueError("nn must be at least 1")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")
        if self.structure not in STRUCTURES:
            raise ValueError(f"unknown structure {self.structure!r}")


def cost_matrix(C):
    """Pairwise squared Euclidean distances between centroid columns.

    Args:
        C: D x K centroid matrix.

    Returns:
        K x K symmetric matrix with exact zero diagonal and nonnegative
        entries.
    """
    C = np.asarray(C, dtype=float)
    sq = np.einsum("dk,dk->k", C, C)
    phi = sq[:, None] + sq[None, :] - 2.0 * (C.T @ C)
    np.maximum(phi, 0.0, out=phi)
    phi = 0.5 * (phi + phi.T)  # exact symmetry despite rounding
    np.fill_diagonal(phi, 0.0)
    return phi


def laplacian(W):
    """Combinatorial graph Laplacian diag(W 1) - W."""
    W = np.asarray(W, dtype=float)
    return np.diag(W.sum(axis=1)) - W


def rge_penalty(C, W):
    """Graph-weighted sum of squared centroid distances, sum_kk' w_kk' ||c_k - c_k'||^2.

    Both (k, k') orderings contribute, so a symmetric W counts every
    undirected edge twice.
    """
    return float(np.sum(np.asarray(W, dtype=float) * cost_matrix(C)))


def squared_distances(X, C):
    """N x K matrix of squared Euclidean distances between columns of X and C."""
    X = np.asarray(X, dtype=float)
    C = np.asarray(C, dtype=float)
    sx = np.einsum("dn,dn->n", X, X)
    sc = np.einsum("dk,dk->k", C, C)
    d2 = sx[:, None] + sc[None, :] - 2.0 * (X.T @ C)
    np.maximum(d2, 0.0, out=d2)
    return d2


def grouping_cost(X, C, P, sigma):
    """Soft data-fit term sum_ik p_ik (||x_i - c_k||^2 + sigma log p_ik).

    Zero entries of P contribute nothing (0 log 0 = 0).
    """
    P = np.asarray(P, dtype=float)
    d2 = squared_distances(X, C)
    ent = np.zeros_like(P)
    pos = P > 0.0
    ent[pos] = P[pos] * np.log(P[pos])
    return float(np.sum(P * d2) + sigma * np.sum(ent))


def l1_reconstruction(C, W):
    """Entrywise l1 norm of C (I - W): sum_k ||c_k - sum_{k'!=k} w_k'k c_k'||_1."""
    C = np.asarray(C, dtype=float)
    W = np.asarray(W, dtype=float)
    return float(np.abs(C - C @ W).sum())


def objective(X, C, W, P, params):
    """Full fitting objective for the given structure.

    rge_penalty(C, W) + gamma * grouping_cost(...), plus
    lam * l1_reconstruction(C, W) when the structure is ``l1-graph``.

    Args:
        X: D x N data matrix.
        C: D x K centroid matrix.
        W: K x K symmetric nonnegative weights, zero diagonal.
        P: N x K assignment matrix with nonnegative entries.
        params: FitParams supplying sigma, gamma, lam and structure.

    Raises:
        ValueError: if P has negative entries.
    """
    P = np.asarray(P, dtype=float)
    if (P < 0.0).any():
        raise ValueError("assignment matrix must be nonnegative")
    value = rge_penalty(C, W) + params.gamma * grouping_cost(X, C, P, params.sigma)
    if params.structure == L1_GRAPH:
        value += params.lam * l1_reconstruction(C, W)
    return value


def harmonic_point(C, W, k):
    """Weighted average of vertex k's neighbours, sum_k' w_kk' c_k' / sum_k' w_kk'.

    This is the point at which placing c_k minimises rge_penalty with all
    other centroids held fixed.

    Raises:
        ValueError: if vertex k has no neighbours (zero weight row).
    """
    C = np.asarray(C, dtype=float)
    W = np.asarray(W, dtype=float)
    w = W[k]
    total = w.sum()
    if total <= 0.0:
        raise ValueError(f"vertex {k} has no neighbours")
    return (C @ w) / total
