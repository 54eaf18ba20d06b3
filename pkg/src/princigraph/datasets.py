"""Synthetic 2-D benchmark shapes and preprocessing transforms.

Every generator draws points on a parametric skeleton inside (roughly) the
unit box [-1, 1]^2, then adds isotropic Gaussian jitter with standard
deviation ``noise``.  Alongside the samples it returns integer structure
labels (branch or component ids) so downstream topology checks can score a
fitted graph against the truth.
"""

import numpy as np

from .model import squared_distances

DATASET_NAMES = (
    "distorted-s",
    "spiral",
    "circle",
    "two-moon",
    "tree",
    "three-clusters",
)

DEFAULT_SIZES = {
    "distorted-s": 100,
    "spiral": 200,
    "circle": 100,
    "two-moon": 200,
    "tree": 300,
    "three-clusters": 300,
}

# Per-shape fitting defaults (sigma, gamma, lam, nn) that give clean skeletons.
DEFAULT_FIT_PARAMS = {
    "distorted-s": {"sigma": 0.01, "gamma": 0.5, "lam": 1.0, "nn": 5},
    "spiral": {"sigma": 0.01, "gamma": 0.5, "lam": 1.0, "nn": 10},
    "circle": {"sigma": 0.1, "gamma": 0.5, "lam": 1.0, "nn": 10},
    "two-moon": {"sigma": 0.01, "gamma": 3.0, "lam": 0.1, "nn": 5},
    "tree": {"sigma": 0.01, "gamma": 10.0, "lam": 1.0, "nn": 5},
    "three-clusters": {"sigma": 0.01, "gamma": 0.5, "lam": 0.1, "nn": 5},
}

_TREE_SEGMENTS = [
    ((0.0, -1.0), (0.0, -0.2)),
    ((0.0, -0.2), (-0.7, 0.35)),
    ((0.0, -0.2), (0.7, 0.35)),
    ((-0.7, 0.35), (-0.9, 0.9)),
    ((-0.7, 0.35), (-0.25, 0.9)),
    ((0.7, 0.35), (0.25, 0.9)),
    ((0.7, 0.35), (0.9, 0.9)),
]

_CLUSTER_SEGMENTS = [
    ((-0.85, -0.5), (-0.35, -0.7)),
    ((0.35, -0.7), (0.85, -0.5)),
    ((-0.25, 0.75), (0.25, 0.6)),
]


def _sample_segments(segments, n, rng):
    """Points drawn uniformly along a list of segments, labelled by segment."""
    a = np.array([s[0] for s in segments])
    b = np.array([s[1] for s in segments])
    lengths = np.linalg.norm(b - a, axis=1)
    cum = np.cumsum(lengths)
    u = rng.uniform(0.0, cum[-1], size=n)
    seg = np.searchsorted(cum, u, side="right").clip(max=len(segments) - 1)
    t = (u - (cum[seg] - lengths[seg])) / lengths[seg]
    pts = a[seg] + t[:, None] * (b[seg] - a[seg])
    return pts.T, seg.astype(int)


def _gen_distorted_s(n, rng):
    t = np.sort(rng.uniform(-1.0, 1.0, size=n))
    x = 0.7 * np.sin(np.pi * t) + 0.25 * t * t
    return np.vstack([x, t]), np.zeros(n, dtype=int)


def _gen_spiral(n, rng):
    t = np.sort(rng.uniform(0.0, 1.0, size=n))
    theta = 0.5 * np.pi + 2.25 * np.pi * t
    r = 0.1 + 0.9 * t
    return np.vstack([r * np.cos(theta), r * np.sin(theta)]), np.zeros(n, dtype=int)


def _gen_circle(n, rng):
    theta = np.sort(rng.uniform(0.0, 2.0 * np.pi, size=n))
    return np.vstack([np.cos(theta), np.sin(theta)]), np.zeros(n, dtype=int)


def _gen_two_moon(n, rng):
    half = n // 2
    t = rng.uniform(0.0, np.pi, size=n)
    outer = np.vstack([np.cos(t[:half]), np.sin(t[:half])])
    inner = np.vstack([1.0 - np.cos(t[half:]), 0.5 - np.sin(t[half:])])
    X = np.hstack([outer, inner])
    X = (X - np.array([[0.5], [0.25]])) / 1.5
    labels = np.repeat([0, 1], [half, n - half])
    return X, labels


def _gen_tree(n, rng):
    return _sample_segments(_TREE_SEGMENTS, n, rng)


def _gen_three_clusters(n, rng):
    X, labels = _sample_segments(_CLUSTER_SEGMENTS, n, rng)
    return X, labels


_GENERATORS = {
    "distorted-s": _gen_distorted_s,
    "spiral": _gen_spiral,
    "circle": _gen_circle,
    "two-moon": _gen_two_moon,
    "tree": _gen_tree,
    "three-clusters": _gen_three_clusters,
}


def gen_dataset(name, n=None, noise=0.05, seed=0):
    """Sample one of the named benchmark shapes.

    Args:
        name: one of DATASET_NAMES.
        n: number of points (>= 10); defaults to the shape's standard size.
        noise: standard deviation of the Gaussian jitter (0 disables it).
        seed: RNG seed; fixed (name, n, noise, seed) reproduces bit-identical
            output.

    Returns:
        (X, labels): 2 x n data matrix and length-n integer structure labels.
    """
    if name not in _GENERATORS:
        raise ValueError(f"unknown dataset {name!r}; expected one of {DATASET_NAMES}")
    if n is None:
        n = DEFAULT_SIZES[name]
    if n < 10:
        raise ValueError(f"need at least 10 points, got {n}")
    if noise < 0:
        raise ValueError("noise must be nonnegative")
    rng = np.random.default_rng(seed)
    X, labels = _GENERATORS[name](int(n), rng)
    if noise > 0:
        X = X + rng.normal(0.0, noise, size=X.shape)
    return X, labels


def standardize(X):
    """Center each dimension and divide by its population standard deviation.

    Dimensions with zero spread are centered but left unscaled.
    """
    X = np.asarray(X, dtype=float)
    out = X - X.mean(axis=1, keepdims=True)
    sd = X.std(axis=1)  # population convention (denominator N)
    live = sd > 0.0
    out[live] /= sd[live, None]
    return out


def heat_kernel_features(X):
    """Pairwise similarity features K_ij = exp(-||x_i - x_j||^2 / D).

    D is the input dimension; the result is a symmetric N x N feature
    matrix with unit diagonal, usable as a new data matrix.
    """
    X = np.asarray(X, dtype=float)
    D = X.shape[0]
    d2 = squared_distances(X, X)
    d2 = 0.5 * (d2 + d2.T)
    np.fill_diagonal(d2, 0.0)
    return np.exp(-d2 / D)


def pca_reduce(X, energy=0.95):
    """Project onto the smallest leading principal subspace holding ``energy`` of the variance.

    Eigenvector signs are pinned (largest-magnitude loading positive) so the
    projection is deterministic.  With energy = 1 the output dimension is
    the rank of the covariance and pairwise distances are preserved.

    Args:
        X: D x N data matrix (centered internally).
        energy: fraction of total variance to keep, in (0, 1].

    Returns:
        d x N projected coordinates, d <= D.
    """
    if not 0.0 < energy <= 1.0:
        raise ValueError("energy must lie in (0, 1]")
    X = np.asarray(X, dtype=float)
    Xc = X - X.mean(axis=1, keepdims=True)
    cov = (Xc @ Xc.T) / X.shape[1]
    evals, evecs = np.linalg.eigh(cov)
    order = np.argsort(evals)[::-1]
    evals = np.maximum(evals[order], 0.0)
    total = evals.sum()
    if total <= 0.0:
        raise ValueError("data has no variance to project")
    cum = np.cumsum(evals)
    d = int(np.searchsorted(cum, energy * total - 1e-12 * total) + 1)
    V = evecs[:, order[:d]]
    flip = V[np.argmax(np.abs(V), axis=0), np.arange(d)] < 0
    V[:, flip] *= -1.0
    return V.T @ Xc


def maxabs_rescale(X):
    """Divide each dimension by its maximum absolute value (all-zero dims pass through)."""
    X = np.asarray(X, dtype=float)
    m = np.abs(X).max(axis=1)
    out = X.copy()
    live = m > 0.0
    out[live] /= m[live, None]
    return out
