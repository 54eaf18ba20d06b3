import numpy as np
import pytest

from princigraph.model import (
    L1_GRAPH,
    SPANNING_TREE,
    FitParams,
    cost_matrix,
    grouping_cost,
    harmonic_point,
    laplacian,
    objective,
    rge_penalty,
    squared_distances,
)


def test_cost_matrix_identical_points():
    C = np.zeros((2, 2))
    assert np.array_equal(cost_matrix(C), np.zeros((2, 2)))


def test_cost_matrix_1d_literals():
    C = np.array([[0.0, 3.0, 4.0]])
    phi = cost_matrix(C)
    assert phi[0, 1] == pytest.approx(9.0, abs=1e-12)
    assert phi[0, 2] == pytest.approx(16.0, abs=1e-12)
    assert phi[1, 2] == pytest.approx(1.0, abs=1e-12)
    assert np.array_equal(phi, phi.T)
    assert np.all(np.diag(phi) == 0.0)


def test_cost_matrix_permutation_equivariance():
    rng = np.random.default_rng(7)
    C = rng.normal(size=(3, 8))
    phi = cost_matrix(C)
    perm = rng.permutation(8)
    phi_p = cost_matrix(C[:, perm])
    assert np.allclose(phi_p, phi[np.ix_(perm, perm)], atol=1e-12)


def test_cost_matrix_nonnegative_symmetric_random():
    rng = np.random.default_rng(11)
    for _ in range(20):
        C = rng.normal(size=(rng.integers(1, 5), rng.integers(2, 12)))
        phi = cost_matrix(C)
        assert np.all(phi >= 0.0)
        assert np.array_equal(phi, phi.T)
        assert np.all(np.diag(phi) == 0.0)


def test_laplacian_two_vertex_literal():
    W = np.array([[0.0, 1.0], [1.0, 0.0]])
    assert np.array_equal(laplacian(W), np.array([[1.0, -1.0], [-1.0, 1.0]]))


def test_laplacian_empty_graph():
    assert np.array_equal(laplacian(np.zeros((4, 4))), np.zeros((4, 4)))


def test_laplacian_psd_zero_rowsum():
    # smallest eigenvalue >= -1e-10 and L @ 1 = 0 for random nonnegative W
    rng = np.random.default_rng(3)
    for _ in range(25):
        K = int(rng.integers(2, 10))
        W = rng.random((K, K))
        W = 0.5 * (W + W.T)
        np.fill_diagonal(W, 0.0)
        L = laplacian(W)
        assert np.allclose(L, L.T, atol=1e-12)
        assert np.abs(L @ np.ones(K)).max() < 1e-10
        assert np.linalg.eigvalsh(L).min() >= -1e-10


def test_rge_penalty_no_edges():
    C = np.random.default_rng(0).normal(size=(2, 5))
    assert rge_penalty(C, np.zeros((5, 5))) == 0.0


def test_rge_penalty_1d_literal():
    C = np.array([[0.0, 1.0]])
    W = np.array([[0.0, 2.0], [2.0, 0.0]])
    assert rge_penalty(C, W) == pytest.approx(4.0, abs=1e-12)


def test_rge_penalty_trace_identity():
    rng = np.random.default_rng(5)
    for _ in range(20):
        K = int(rng.integers(2, 9))
        C = rng.normal(size=(3, K))
        W = rng.random((K, K))
        W = 0.5 * (W + W.T)
        np.fill_diagonal(W, 0.0)
        val = rge_penalty(C, W)
        tr = float(np.trace(cost_matrix(C).T @ W))
        assert val == pytest.approx(tr, rel=1e-10, abs=1e-10)


def test_objective_perfect_fit_empty_graph():
    """Identity assignment onto the data itself with no edges costs nothing."""
    X = np.array([[0.0, 1.0, 2.0]])
    params = FitParams(sigma=1.0, gamma=1.0)
    P = np.eye(3)
    val = objective(X, X.copy(), np.zeros((3, 3)), P, params)
    assert val == pytest.approx(0.0, abs=1e-12)


def test_objective_two_point_hand_value():
    # rge term 2, quantization 1, entropy -2 log 2 at uniform assignments
    X = np.array([[0.0, 1.0]])
    W = np.array([[0.0, 1.0], [1.0, 0.0]])
    P = np.full((2, 2), 0.5)
    params = FitParams(sigma=1.0, gamma=1.0, structure=SPANNING_TREE)
    val = objective(X, X.copy(), W, P, params)
    assert val == pytest.approx(3.0 - 2.0 * np.log(2.0), abs=1e-12)


def test_objective_rejects_negative_assignments():
    X = np.array([[0.0, 1.0]])
    P = np.array([[1.5, -0.5], [0.5, 0.5]])
    params = FitParams(sigma=1.0, gamma=1.0)
    with pytest.raises(ValueError):
        objective(X, X.copy(), np.zeros((2, 2)), P, params)


def test_objective_l1_structure_adds_reconstruction_term():
    X = np.array([[0.0, 1.0, 2.0]])
    C = X.copy()
    W = np.zeros((3, 3))
    P = np.eye(3)
    tree = FitParams(sigma=1.0, gamma=1.0, lam=2.0, structure=SPANNING_TREE)
    l1 = FitParams(sigma=1.0, gamma=1.0, lam=2.0, structure=L1_GRAPH)
    # with W = 0 the reconstruction error is sum |c_k| = 3
    base = objective(X, C, W, P, tree)
    assert objective(X, C, W, P, l1) == pytest.approx(base + 2.0 * 3.0, abs=1e-12)


def test_objective_permutation_invariance():
    rng = np.random.default_rng(13)
    X = rng.normal(size=(2, 6))
    C = rng.normal(size=(2, 6))
    W = rng.random((6, 6))
    W = 0.5 * (W + W.T)
    np.fill_diagonal(W, 0.0)
    P = rng.random((6, 6)) + 0.1
    P /= P.sum(axis=1, keepdims=True)
    params = FitParams(sigma=0.7, gamma=2.0, lam=0.3, structure=L1_GRAPH)
    base = objective(X, C, W, P, params)
    perm = rng.permutation(6)
    val = objective(
        X, C[:, perm], W[np.ix_(perm, perm)], P[:, perm], params
    )
    assert val == pytest.approx(base, rel=1e-10)


def test_objective_midpoint_convexity():
    """Midpoint value never exceeds the average of the endpoint values,
    separately in C (with W,P fixed) and in (W,P) (with C fixed)."""
    rng = np.random.default_rng(17)
    X = rng.normal(size=(2, 5))
    params = FitParams(sigma=0.5, gamma=1.5)

    def rand_wp():
        W = rng.random((5, 5))
        W = 0.5 * (W + W.T)
        np.fill_diagonal(W, 0.0)
        P = rng.random((5, 5)) + 0.05
        P /= P.sum(axis=1, keepdims=True)
        return W, P

    for _ in range(30):
        W, P = rand_wp()
        C1 = rng.normal(size=(2, 5))
        C2 = rng.normal(size=(2, 5))
        mid = objective(X, 0.5 * (C1 + C2), W, P, params)
        avg = 0.5 * (objective(X, C1, W, P, params) + objective(X, C2, W, P, params))
        assert mid <= avg + 1e-10 * (1.0 + abs(avg))

    for _ in range(30):
        C = rng.normal(size=(2, 5))
        W1, P1 = rand_wp()
        W2, P2 = rand_wp()
        mid = objective(X, C, 0.5 * (W1 + W2), 0.5 * (P1 + P2), params)
        avg = 0.5 * (
            objective(X, C, W1, P1, params) + objective(X, C, W2, P2, params)
        )
        assert mid <= avg + 1e-10 * (1.0 + abs(avg))


def test_grouping_cost_zero_entropy_at_hard_assignments():
    X = np.array([[0.0, 1.0]])
    C = X.copy()
    P = np.eye(2)
    assert grouping_cost(X, C, P, sigma=1.0) == pytest.approx(0.0, abs=1e-12)


def test_squared_distances_shape_and_values():
    X = np.array([[0.0, 1.0, 2.0]])
    C = np.array([[0.0, 2.0]])
    d2 = squared_distances(X, C)
    assert d2.shape == (3, 2)
    assert np.allclose(d2, [[0.0, 4.0], [1.0, 1.0], [4.0, 0.0]], atol=1e-12)


def test_harmonic_point_single_neighbor():
    C = np.array([[0.0, 5.0], [0.0, -2.0]])
    W = np.array([[0.0, 3.0], [3.0, 0.0]])
    assert np.allclose(harmonic_point(C, W, 0), [5.0, -2.0], atol=1e-12)


def test_harmonic_point_midpoint():
    C = np.array([[1.0, 0.0, 2.0], [7.0, 0.0, 0.0]])
    W = np.zeros((3, 3))
    W[0, 1] = W[1, 0] = 1.0
    W[0, 2] = W[2, 0] = 1.0
    assert np.allclose(harmonic_point(C, W, 0), [1.0, 0.0], atol=1e-12)


def test_harmonic_point_isolated_vertex_errors():
    C = np.array([[0.0, 1.0]])
    with pytest.raises(ValueError):
        harmonic_point(C, np.zeros((2, 2)), 1)


def test_harmonic_point_minimizes_edge_penalty():
    """Moving a vertex off its neighborhood average strictly increases the
    edge-length penalty; checked against random perturbations."""
    rng = np.random.default_rng(23)
    for _ in range(20):
        K = int(rng.integers(3, 8))
        C = rng.normal(size=(2, K))
        W = rng.random((K, K)) * (rng.random((K, K)) < 0.6)
        W = 0.5 * (W + W.T)
        np.fill_diagonal(W, 0.0)
        k = int(rng.integers(K))
        if W[k].sum() <= 0:
            continue
        C_opt = C.copy()
        C_opt[:, k] = harmonic_point(C, W, k)
        best = rge_penalty(C_opt, W)
        for _ in range(10):
            C_try = C_opt.copy()
            C_try[:, k] += rng.normal(scale=0.3, size=2)
            assert rge_penalty(C_try, W) >= best - 1e-10


def test_harmonic_point_stationarity_finite_difference():
    # partial derivative of the penalty w.r.t. the updated column vanishes
    rng = np.random.default_rng(29)
    C = rng.normal(size=(3, 6))
    W = rng.random((6, 6))
    W = 0.5 * (W + W.T)
    np.fill_diagonal(W, 0.0)
    k = 2
    C = C.copy()
    C[:, k] = harmonic_point(C, W, k)
    step = 1e-5
    for d in range(3):
        up = C.copy()
        up[d, k] += step
        dn = C.copy()
        dn[d, k] -= step
        grad = (rge_penalty(up, W) - rge_penalty(dn, W)) / (2.0 * step)
        assert abs(grad) < 1e-6


def test_fitparams_validation():
    with pytest.raises(ValueError):
        FitParams(sigma=0.0, gamma=1.0)
    with pytest.raises(ValueError):
        FitParams(sigma=1.0, gamma=-1.0)
    with pytest.raises(ValueError):
        FitParams(sigma=1.0, gamma=1.0, lam=0.0)
    with pytest.raises(ValueError):
        FitParams(sigma=1.0, gamma=1.0, tol=0.0)
    with pytest.raises(ValueError):
        FitParams(sigma=1.0, gamma=1.0, structure="ring")
    with pytest.raises(ValueError):
        FitParams(sigma=1.0, gamma=1.0, nn=0)
