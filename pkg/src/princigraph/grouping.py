"""Soft and hard assignment of data points to centroids."""

import numpy as np
from scipy.special import logsumexp

from .model import squared_distances


def update_assignments(X, C, sigma):
    """Row-stochastic soft assignments p_ik = exp(-d_ik^2/sigma) / sum_k' exp(-d_ik'^2/sigma).

    Evaluated through log-sum-exp so arbitrarily large distances neither
    overflow nor produce NaNs.
    """
    logits = -squared_distances(X, C) / sigma
    P = np.exp(logits - logsumexp(logits, axis=1, keepdims=True))
    P /= P.sum(axis=1, keepdims=True)
    return P


def update_assignments_colstochastic(X, C, sigma):
    """Column-stochastic variant: each centroid's column sums to one."""
    logits = -squared_distances(X, C) / sigma
    P = np.exp(logits - logsumexp(logits, axis=0, keepdims=True))
    P /= P.sum(axis=0, keepdims=True)
    return P


def hard_assignments(X, C):
    """0/1 assignment of every point to its nearest centroid.

    Ties go to the lowest centroid index, so the result is deterministic.
    """
    d2 = squared_distances(X, C)
    idx = np.argmin(d2, axis=1)
    P = np.zeros_like(d2)
    P[np.arange(d2.shape[0]), idx] = 1.0
    return P


def free_energy(X, C, sigma):
    """Value -sigma * sum_i log sum_k exp(-||x_i - c_k||^2 / sigma).

    Equals grouping_cost(X, C, P, sigma) at the optimal row-stochastic P,
    i.e. the one produced by update_assignments.
    """
    logits = -squared_distances(X, C) / sigma
    return float(-sigma * logsumexp(logits, axis=1).sum())
