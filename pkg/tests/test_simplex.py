"""Standard-form LP solver tests: textbook instances with known optima,
infeasible/unbounded detection, and randomized cross-checks against
scipy's independent implementation."""

import numpy as np
import pytest
from scipy.optimize import linprog

from princigraph.simplex import (
    LpInfeasible,
    LpIterationLimit,
    LpUnbounded,
    solve_standard_form,
)


def as_standard_form_with_slacks(A_ub, b_ub, c):
    """max-style helper: A_ub x <= b_ub, x >= 0 into equality form."""
    m, n = A_ub.shape
    A = np.hstack([A_ub, np.eye(m)])
    c_full = np.concatenate([c, np.zeros(m)])
    return A, b_ub.astype(float), c_full


def test_textbook_production_problem():
    # max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18  -> optimum (2, 6)
    A_ub = np.array([[1.0, 0.0], [0.0, 2.0], [3.0, 2.0]])
    b_ub = np.array([4.0, 12.0, 18.0])
    c = np.array([-3.0, -5.0])
    A, b, cf = as_standard_form_with_slacks(A_ub, b_ub, c)
    sol = solve_standard_form(A, b, cf)
    assert sol.objective == pytest.approx(-36.0, abs=1e-9)
    assert np.allclose(sol.x[:2], [2.0, 6.0], atol=1e-9)


def test_equality_form_direct():
    # min x1 + 2 x2 subject to x1 + x2 = 1 -> put all mass on x1
    A = np.array([[1.0, 1.0]])
    b = np.array([1.0])
    c = np.array([1.0, 2.0])
    sol = solve_standard_form(A, b, c)
    assert sol.objective == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(sol.x, [1.0, 0.0], atol=1e-12)


def test_negative_rhs_rows_are_flipped():
    # -x1 - x2 = -1 is the same constraint as above
    A = np.array([[-1.0, -1.0]])
    b = np.array([-1.0])
    c = np.array([1.0, 2.0])
    sol = solve_standard_form(A, b, c)
    assert sol.objective == pytest.approx(1.0, abs=1e-12)


def test_warm_start_basis_skips_phase_one():
    A = np.array([[1.0, 1.0, 1.0, 0.0], [1.0, 3.0, 0.0, 1.0]])
    b = np.array([4.0, 6.0])
    c = np.array([-2.0, -3.0, 0.0, 0.0])
    sol = solve_standard_form(A, b, c, basis=np.array([2, 3]))
    # optimum at x = (3, 1): objective -9
    assert sol.objective == pytest.approx(-9.0, abs=1e-9)
    assert np.allclose(sol.x[:2], [3.0, 1.0], atol=1e-9)


def test_infeasible_detected():
    # x1 + x2 cannot equal both 1 and 3; phase one must report it
    A = np.array([[1.0, 1.0], [1.0, 1.0]])
    b = np.array([1.0, 3.0])
    c = np.array([1.0, 1.0])
    with pytest.raises(LpInfeasible):
        solve_standard_form(A, b, c)


def test_unbounded_detected():
    # min -x1 with x1 - x2 = 1: x = (1 + t, t) drives the objective to -inf
    A = np.array([[1.0, -1.0]])
    b = np.array([1.0])
    c = np.array([-1.0, 0.0])
    with pytest.raises(LpUnbounded):
        solve_standard_form(A, b, c)


def test_iteration_limit_carries_best_point():
    rng = np.random.default_rng(0)
    A_ub = rng.random((6, 8))
    b_ub = rng.random(6) + 1.0
    c = -rng.random(8)
    A, b, cf = as_standard_form_with_slacks(A_ub, b_ub, c)
    # a zero budget forces the limit path; the slack point is still feasible
    with pytest.raises(LpIterationLimit) as exc:
        solve_standard_form(A, b, cf, basis=np.arange(8, 14), max_iters=0)
    assert exc.value.best_x is not None
    assert np.abs(A @ exc.value.best_x - b).max() < 1e-8


def test_degenerate_problem_terminates():
    # redundant constraints force degenerate vertices; Bland's rule must
    # still terminate at the optimum
    A = np.array(
        [
            [1.0, 1.0, 1.0, 0.0, 0.0],
            [1.0, 1.0, 0.0, 1.0, 0.0],
            [1.0, 0.0, 0.0, 0.0, 1.0],
        ]
    )
    b = np.array([1.0, 1.0, 1.0])
    c = np.array([-1.0, -1.0, 0.0, 0.0, 0.0])
    sol = solve_standard_form(A, b, c)
    assert sol.objective == pytest.approx(-1.0, abs=1e-9)


def test_random_instances_match_scipy():
    """Cross-check optimal objectives against scipy.optimize.linprog on
    feasible random inequality-form programs."""
    rng = np.random.default_rng(123)
    checked = 0
    while checked < 40:
        m = int(rng.integers(2, 7))
        n = int(rng.integers(2, 9))
        A_ub = rng.normal(size=(m, n))
        b_ub = rng.random(m) + 0.5  # x = 0 feasible
        c = rng.normal(size=n)
        c = np.where(c < 0, c, -c)  # encourage a nontrivial optimum
        ref = linprog(c, A_ub=A_ub, b_ub=b_ub, bounds=(0, None), method="highs")
        if ref.status != 0:
            continue
        A, b, cf = as_standard_form_with_slacks(A_ub, b_ub, c)
        flip = b < 0
        A[flip] *= -1
        b[flip] *= -1
        sol = solve_standard_form(A, b, cf)
        assert sol.objective == pytest.approx(ref.fun, abs=1e-7)
        checked += 1
    assert checked == 40


def test_solution_is_feasible_and_certified():
    rng = np.random.default_rng(7)
    A_ub = rng.random((5, 7))  # nonnegative rows keep the program bounded
    b_ub = rng.random(5) + 1.0
    c = -rng.random(7)
    A, b, cf = as_standard_form_with_slacks(A_ub, b_ub, c)
    sol = solve_standard_form(A, b, cf)
    assert np.abs(A @ sol.x - b).max() < 1e-8
    assert sol.x.min() >= 0.0
    assert sol.reduced_costs.min() >= -1e-9
    # complementary slackness: basic variables price to (near) zero
    assert np.abs(sol.reduced_costs[sol.basis]).max() < 1e-8
