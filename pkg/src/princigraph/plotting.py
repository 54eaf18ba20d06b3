"""Deterministic SVG rendering of a fitted graph over its data."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.collections import LineCollection
import numpy as np

_EDGE_THRESHOLD = 1e-6


def render_fit_svg(path, X, centroids, weights, threshold=_EDGE_THRESHOLD):
    """Write an 800 x 800 SVG of data points, centroids and graph edges.

    Data and centroids are rescaled together so the data fills the unit
    square.  Output bytes depend only on the inputs (fixed hash salt, no
    timestamps), so identical fits render identical files.

    Args:
        path: destination file.
        X: 2 x N data matrix.
        centroids: 2 x K fitted centroids.
        weights: K x K symmetric weight matrix; edges above ``threshold``
            are drawn.
    """
    X = np.asarray(X, dtype=float)
    C = np.asarray(centroids, dtype=float)
    if X.shape[0] != 2 or C.shape[0] != 2:
        raise ValueError("plotting requires 2-D data and centroids")
    lo = X.min(axis=1, keepdims=True)
    span = X.max(axis=1, keepdims=True) - lo
    span[span == 0.0] = 1.0
    U = (X - lo) / span
    V = (C - lo) / span

    ii, jj = np.nonzero(np.triu(np.asarray(weights, dtype=float) > threshold, k=1))
    segments = [((V[0, i], V[1, i]), (V[0, j], V[1, j])) for i, j in zip(ii, jj)]

    with plt.rc_context({"svg.hashsalt": "princigraph"}):
        fig = plt.figure(figsize=(800 / 72, 800 / 72))
        ax = fig.add_axes([0.05, 0.05, 0.9, 0.9])
        ax.set_aspect("equal")
        ax.scatter(U[0], U[1], s=14, c="0.7", linewidths=0, zorder=1)
        if segments:
            ax.add_collection(
                LineCollection(segments, colors="tab:blue", linewidths=1.2, zorder=2)
            )
        ax.scatter(V[0], V[1], s=22, c="tab:red", linewidths=0, zorder=3)
        ax.set_xlim(-0.05, 1.05)
        ax.set_ylim(-0.05, 1.05)
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
