"""Closed-form centroid update given fixed assignments and graph weights."""

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .model import laplacian


def update_centroids(X, P, W, gamma):
    """Minimiser of the fitting objective over centroids with P and W fixed.

    Solves C (2/gamma L + Lambda) = X P for C, where L is the Laplacian of W
    and Lambda holds the column sums of P.  The system matrix is symmetric
    positive definite whenever every centroid carries some assignment mass,
    so a single Cholesky factorisation serves all D right-hand sides.

    Args:
        X: D x N data matrix.
        P: N x K nonnegative assignment matrix.
        W: K x K symmetric nonnegative weights.
        gamma: positive data-fit weight.

    Returns:
        D x K centroid matrix.

    Raises:
        ValueError: if some column of P sums to zero (empty cluster under
            hard assignment) or the system cannot be factorised.
    """
    X = np.asarray(X, dtype=float)
    P = np.asarray(P, dtype=float)
    mass = P.sum(axis=0)
    if (mass <= 0.0).any():
        raise ValueError("empty cluster under hard assignment: a column of P sums to zero")
    M = (2.0 / gamma) * laplacian(W)
    M[np.diag_indices_from(M)] += mass
    try:
        factor = cho_factor(M)
    except np.linalg.LinAlgError as exc:
        raise ValueError(f"centroid system is not positive definite: {exc}") from exc
    return cho_solve(factor, (X @ P).T).T
