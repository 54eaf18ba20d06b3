"""Minimum spanning tree over centroids via Kruskal's algorithm."""

import numpy as np


class UnionFind:
    """Disjoint sets with path compression and union by rank."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, a):
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:  # compress
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def kruskal_mst(phi):
    """Minimum spanning tree of the complete graph with edge costs phi.

    Args:
        phi: K x K symmetric nonnegative cost matrix (zero diagonal).

    Returns:
        K x K symmetric 0/1 weight matrix with exactly K - 1 undirected
        edges.  Cost ties are broken by (cost, min endpoint, max endpoint),
        so the result is deterministic.

    Raises:
        ValueError: if phi contains non-finite entries.
    """
    phi = np.asarray(phi, dtype=float)
    if not np.isfinite(phi).all():
        raise ValueError("edge costs must be finite")
    K = phi.shape[0]
    W = np.zeros((K, K))
    if K <= 1:
        return W
    ii, jj = np.triu_indices(K, k=1)
    costs = phi[ii, jj]
    order = np.lexsort((jj, ii, costs))
    uf = UnionFind(K)
    taken = 0
    for e in order:
        u, v = int(ii[e]), int(jj[e])
        if uf.union(u, v):
            W[u, v] = W[v, u] = 1.0
            taken += 1
            if taken == K - 1:
                break
    return W


def validate_tree(W):
    """True iff W is the 0/1 adjacency matrix of a spanning tree.

    Checks symmetry, zero diagonal, binary entries, exactly 2(K - 1)
    nonzeros and connectivity.  A single vertex with no edges counts as a
    (degenerate) tree.
    """
    W = np.asarray(W, dtype=float)
    K = W.shape[0]
    if W.shape != (K, K):
        return False
    if not np.array_equal(W, W.T):
        return False
    if np.diagonal(W).any():
        return False
    if not np.isin(W, (0.0, 1.0)).all():
        return False
    if np.count_nonzero(W) != 2 * (K - 1):
        return False
    uf = UnionFind(K)
    for u, v in zip(*np.nonzero(np.triu(W, k=1))):
        uf.union(int(u), int(v))
    return len({uf.find(k) for k in range(K)}) == 1
