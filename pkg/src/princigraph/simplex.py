"""Revised primal simplex for linear programs in standard equality form.

Solves min c @ x subject to A @ x = b, x >= 0, keeping an explicit basis
inverse rather than a full tableau.  Reduced costs and the entering column
are recomputed from the original data at every pivot, so stale-entry drift
— the classic failure mode of dense tableau codes on long degenerate walks
— cannot poison pivot decisions.  Robustness rests on four safeguards:

* the basis inverse is refactorized from the original columns every 64
  pivots (and whenever a ray needs confirming), bounding error growth;
* a Harris-style two-pass ratio test trades a transient 1e-7 bound
  violation for the numerically safest pivot, and columns whose best
  admissible pivot sits below a noise floor are set aside for the round;
* Bland's anti-cycling rule takes over entering/leaving choices whenever
  the objective stalls on a degenerate plateau;
* every returned solution is certified against the original data (reduced
  costs and primal feasibility of the final basis), so approximations made
  while walking can never leak into the result.

Callers that know a feasible basis (e.g. slack columns forming an identity)
can pass it and skip phase one.  If a walk still breaks down numerically,
one restart through phase one under stricter pivot discipline is attempted
before giving up.
"""

from dataclasses import dataclass

import numpy as np

_PIVOT_TOL = 1e-9
_FEAS_TOL = 1e-7  # transient bound violation allowed by the ratio test
_REPAIR_TOL = 1e-6  # revealed infeasibility (per unit scale) that triggers repair
_REFACTOR_EVERY = 64
_OPTIMAL, _BUDGET = 0, 1


class LpError(Exception):
    pass


class LpInfeasible(LpError):
    pass


class LpUnbounded(LpError):
    pass


class LpIterationLimit(LpError):
    """Raised when the pivot budget is exhausted; carries the best feasible point."""

    def __init__(self, message, best_x=None, best_objective=None):
        super().__init__(message)
        self.best_x = best_x
        self.best_objective = best_objective


@dataclass
class LpSolution:
    x: np.ndarray
    objective: float
    basis: np.ndarray
    reduced_costs: np.ndarray
    iterations: int


def _refactorize(A, b, basis):
    """Fresh basis inverse and basic values from the original data.

    Returns (Binv, xB, true_min) where xB is clamped nonnegative for the
    ratio tests and true_min is the unclamped minimum basic value.
    """
    B = A[:, basis]
    try:
        Binv = np.linalg.inv(B)
        xB = np.linalg.solve(B, b)
    except np.linalg.LinAlgError as exc:
        raise LpError(f"basis matrix is singular: {exc}") from exc
    if not np.isfinite(Binv).all():
        raise LpError("basis inverse overflowed")
    # cheap probe: a wildly wrong inverse means the basis is numerically
    # singular even though LU did not hit an exact zero pivot
    probe = B @ Binv[:, 0]
    probe[0] -= 1.0
    if np.abs(probe).max() > 1e-6:
        raise LpError("basis matrix is numerically singular")
    tmin = float(xB.min())
    np.maximum(xB, 0.0, out=xB)
    return Binv, xB, tmin


def _refreshed(A, b, c, basis):
    """Refactorize, repairing any infeasibility the exact solve reveals.

    The wide ratio-test band lets the maintained basic point drift a little
    negative between refactorizations; dual pivots push it back before the
    walk continues.  Returns (Binv, xB, repair_rounds).
    """
    Binv, xB, tmin = _refactorize(A, b, basis)
    scale = 1.0 + np.abs(b).max()
    if tmin >= -_REPAIR_TOL * scale:
        return Binv, xB, 0
    rounds = _dual_cleanup(A, b, c, basis, max_rounds=200 + A.shape[0])
    Binv, xB, tmin = _refactorize(A, b, basis)
    if tmin < -1e-5 * scale:
        raise LpError("dual repair failed to restore feasibility")
    return Binv, xB, rounds


def _choose_leaving(xB, d, basis, bland, floor, band):
    """Pivot row for entering direction d, or -1 (ray) / -2 (only unsafe pivots)."""
    rows = np.nonzero(d > _PIVOT_TOL)[0]
    if rows.size == 0:
        return -1
    if bland:
        # textbook rule (min ratio, ties to the smallest basic index), but
        # still refusing pivots below the noise floor: anti-cycling is no
        # help if the pivot element is numerically meaningless
        safe = rows[d[rows] >= floor]
        if safe.size == 0:
            return -2
        ratios = xB[safe] / d[safe]
        best = ratios.min()
        ties = safe[ratios <= best + _PIVOT_TOL * (1.0 + abs(best))]
        return int(ties[np.argmin(basis[ties])])
    # two-pass test: let the step overshoot feasibility by at most band,
    # then take the numerically safest pivot the slack allows
    limit = ((xB[rows] + band) / d[rows]).min()
    ratios = xB[rows] / d[rows]
    ok = rows[ratios <= limit]
    row = int(ok[np.argmax(d[ok])])
    if d[row] < max(floor, 1e-9 * d[rows].max()):
        return -2
    return row


def _apply_pivot(Binv, xB, basis, in_basis, d, row, q):
    """Move column q into the basis at the given row (product-form update)."""
    theta = xB[row] / d[row]
    xB -= theta * d
    xB[row] = theta
    np.maximum(xB, 0.0, out=xB)
    Binv[row] /= d[row]
    dd = d.copy()
    dd[row] = 0.0
    Binv -= np.outer(dd, Binv[row])
    in_basis[basis[row]] = False
    in_basis[q] = True
    basis[row] = q


def _phase(A, b, c, basis, budget, floor):
    """Pivot until no admissible reduced cost is negative.

    Returns (status, used).  Mutates basis in place.  Columns whose best
    admissible pivot sits below the noise floor are banned for the rest of
    this call; the caller's certificate decides whether that mattered.
    The basis returned on _OPTIMAL is exactly refactorized and repaired,
    so its true basic point is feasible to within the repair tolerance.
    """
    m, n = A.shape
    colscale = 1.0 + np.sqrt(np.einsum("ij,ij->j", A, A))
    in_basis = np.zeros(n, dtype=bool)
    banned = np.zeros(n, dtype=bool)
    used = 0
    since = 0  # pivots since the last refactorization
    fresh = True  # whether the current basis was just refactorized+repaired
    bland = False
    repairs = 0
    stall = 0
    stall_limit = min(300, m + n)
    band = _FEAS_TOL

    Binv, xB, rep = _refreshed(A, b, c, basis)
    used += rep
    repairs += rep > 0
    in_basis[basis] = True
    obj = float(c[basis] @ xB)
    while True:
        y = c[basis] @ Binv
        r = c - y @ A
        r[in_basis | banned] = 0.0
        cand = np.nonzero(r < -_PIVOT_TOL)[0]
        if cand.size == 0:
            if fresh:
                return _OPTIMAL, used
            # confirm against an exact, repaired basis before declaring done
            Binv, xB, rep = _refreshed(A, b, c, basis)
            used += rep
            since = 0
            fresh = True
            if rep:
                repairs += 1
                in_basis[:] = False
                in_basis[basis] = True
            continue
        if used >= budget:
            return _BUDGET, used
        # every repair is evidence the basis is too ill-conditioned for the
        # current overshoot band, so shrink it (to exact past three repairs)
        band = 0.0 if repairs >= 3 else _FEAS_TOL * 0.1**repairs
        window = max(8, _REFACTOR_EVERY >> (2 * min(repairs, 3)))
        if bland:
            q = int(cand[0])
        else:
            q = int(cand[np.argmin(r[cand] / colscale[cand])])
        d = Binv @ A[:, q]
        row = _choose_leaving(xB, d, basis, bland, floor, band)
        if row == -1:
            if fresh:
                raise LpUnbounded("objective unbounded below")
            Binv, xB, rep = _refreshed(A, b, c, basis)
            used += rep
            since = 0
            fresh = True
            if rep:
                repairs += 1
                in_basis[:] = False
                in_basis[basis] = True
            continue  # confirm the ray against a fresh inverse
        if row == -2:
            banned[q] = True
            continue
        _apply_pivot(Binv, xB, basis, in_basis, d, row, q)
        used += 1
        since += 1
        fresh = False
        if since >= window:
            Binv, xB, rep = _refreshed(A, b, c, basis)
            used += rep
            since = 0
            fresh = True
            if rep:
                repairs += 1
                in_basis[:] = False
                in_basis[basis] = True
        new_obj = float(c[basis] @ xB)
        if new_obj < obj - _PIVOT_TOL * (1.0 + abs(obj)):
            stall = 0
        else:
            stall += 1
            if stall > stall_limit:
                bland = True  # degenerate plateau: switch to anti-cycling rule
        obj = new_obj


class _LpInfeasibleBasis(LpError):
    """Internal: the walk ended on a basis whose true basic point is
    primal infeasible (Harris overshoot baked in); a dual cleanup applies."""


def _basic_solution(A, b, c, basis):
    """Basic point and reduced costs recomputed from the original data."""
    AB = A[:, basis]
    try:
        xB = np.linalg.solve(AB, b)
        y = np.linalg.solve(AB.T, c[basis])
    except np.linalg.LinAlgError as exc:
        raise LpError(f"basis matrix is singular: {exc}") from exc
    if xB.min() < -1e-5 * (1.0 + np.abs(b).max()):
        # never certify a point that violates the constraints
        raise _LpInfeasibleBasis("basis is primal infeasible beyond tolerance")
    x = np.zeros(A.shape[1])
    x[basis] = np.maximum(xB, 0.0)
    reduced = c - A.T @ y
    return x, float(c @ x), reduced


def _dual_cleanup(A, b, c, basis, max_rounds):
    """Dual-simplex pivots restoring primal feasibility of the basis.

    The primal walk ends dual feasible (reduced costs pass), so choosing the
    entering column by the dual ratio test removes the leftover negative
    basic values without destroying optimality.  Mutates basis in place.
    """
    m, n = A.shape
    B = A[:, basis]
    try:
        Binv = np.linalg.inv(B)
        xB = np.linalg.solve(B, b)
    except np.linalg.LinAlgError as exc:
        raise LpError(f"basis matrix is singular: {exc}") from exc
    in_basis = np.zeros(n, dtype=bool)
    in_basis[basis] = True
    feas_tol = 1e-7 * (1.0 + np.abs(b).max())
    rounds = 0
    while xB.min() < -feas_tol:
        if rounds >= max_rounds:
            raise LpError("dual cleanup did not restore feasibility")
        row = int(np.argmin(xB))
        alpha = Binv[row] @ A
        y = c[basis] @ Binv
        red = np.maximum(c - y @ A, 0.0)  # dual feasible up to round-off
        cand = np.nonzero((alpha < -1e-9) & ~in_basis)[0]
        if cand.size == 0:
            raise LpError("cannot restore primal feasibility (row has no exit)")
        # two-pass ratio test: allow the reduced costs a transient dip of
        # 1e-7, then take the numerically safest pivot that slack admits
        fall = -alpha[cand]
        limit = ((red[cand] + 1e-7) / fall).min()
        ok = cand[red[cand] / fall <= limit]
        q = int(ok[np.argmax(-alpha[ok])])
        d = Binv @ A[:, q]
        theta = xB[row] / d[row]
        xB -= theta * d
        xB[row] = theta
        Binv[row] /= d[row]
        dd = d.copy()
        dd[row] = 0.0
        Binv -= np.outer(dd, Binv[row])
        in_basis[basis[row]] = False
        in_basis[q] = True
        basis[row] = q
        rounds += 1
        if rounds % 32 == 0:
            B = A[:, basis]
            try:
                Binv = np.linalg.inv(B)
                xB = np.linalg.solve(B, b)
            except np.linalg.LinAlgError as exc:
                raise LpError(f"basis matrix is singular: {exc}") from exc
    return rounds


def _optimize(A, b, c, basis, tol, max_iters, used, floor):
    """Pivot/certify rounds until the reduced costs pass against the
    original data."""
    idle = 0
    cleanups = 0
    while True:
        status, spent = _phase(A, b, c, basis, max_iters - used, floor)
        used += spent
        if status == _BUDGET:
            try:
                x, obj, _ = _basic_solution(A, b, c, basis)
            except LpError:
                x, obj = None, None
            raise LpIterationLimit(
                f"no optimum within {max_iters} pivots",
                best_x=x,
                best_objective=obj,
            )
        try:
            x, obj, reduced = _basic_solution(A, b, c, basis)
        except _LpInfeasibleBasis:
            # the wide ratio-test band can leave the final basis slightly
            # infeasible; it is still dual feasible, so dual pivots repair it
            if cleanups >= 6:
                raise
            used += _dual_cleanup(A, b, c, basis, max_rounds=200 + A.shape[0])
            cleanups += 1
            idle = 0
            x, obj, reduced = _basic_solution(A, b, c, basis)
        if reduced.min() >= -tol:
            return x, obj, reduced, used
        idle = 0 if spent else idle + 1
        if idle >= 4:
            raise LpError("could not certify optimality (numerical breakdown)")
        # admit progressively tinier pivots before giving up: columns set
        # aside by the floor may be exactly the ones the optimum needs
        floor = max(floor * 1e-2, _PIVOT_TOL)


def _phase_one(A, b, tol, max_iters, floor):
    """Feasible basis via artificial variables; detects redundant rows.

    Returns (keep, basis, iterations) where keep indexes the surviving rows
    if dependent constraints were found.
    """
    m, n = A.shape
    A1 = np.hstack([A, np.eye(m)])
    c1 = np.concatenate([np.zeros(n), np.ones(m)])
    basis = np.arange(n, n + m)
    try:
        _, obj, _, used = _optimize(
            A1, b, c1, basis, tol, max_iters, 0, floor
        )
    except LpIterationLimit as exc:
        # budget died before reaching feasibility: no point to report
        raise LpIterationLimit(str(exc)) from None
    if obj > 1e-7 * (1.0 + np.abs(b).sum()):
        raise LpInfeasible("constraints have no nonnegative solution")

    # drive leftover artificials out of the basis where possible; rows
    # whose artificial cannot be replaced are redundant and get dropped
    Binv, xB, _ = _refactorize(A1, b, basis)
    in_basis = np.zeros(n + m, dtype=bool)
    in_basis[basis] = True
    keep = []
    for i in range(m):
        if basis[i] < n:
            keep.append(i)
            continue
        v = Binv[i] @ A  # row i of the transformed original columns
        v[in_basis[:n]] = 0.0
        col = int(np.argmax(np.abs(v)))
        if abs(v[col]) > 1e-6:
            d = Binv @ A1[:, col]
            _apply_pivot(Binv, xB, basis, in_basis, d, i, col)
            keep.append(i)
    return keep, basis[keep], used


def _solve(A, b, c, basis, tol, max_iters, floor):
    used = 0
    if basis is None:
        keep, basis, used = _phase_one(A, b, tol, max_iters, floor)
        A, b = A[keep], b[keep]
    basis = np.asarray(basis, dtype=int).copy()

    x, obj, reduced, used = _optimize(A, b, c, basis, tol, max_iters, used, floor)
    return LpSolution(x, obj, basis, reduced, used)


def solve_standard_form(A, b, c, basis=None, tol=1e-9, max_iters=None):
    """Minimise c @ x subject to A @ x = b, x >= 0.

    Args:
        A: m x n constraint matrix (dense).
        b: right-hand side, length m.
        c: cost vector, length n.
        basis: optional length-m index array of columns forming a feasible
            basis; when omitted, phase one constructs one from artificials.
        tol: optimality tolerance on the reduced costs.
        max_iters: pivot budget (default scales with the problem size).

    Returns:
        LpSolution whose reduced costs are all >= -tol.

    Raises:
        LpInfeasible: no feasible point exists.
        LpUnbounded: the objective is unbounded below.
        LpIterationLimit: pivot budget exhausted; carries the best feasible
            point found so far (when one exists).
        LpError: numerical breakdown that survived a restart.
    """
    A = np.array(A, dtype=float)
    b = np.array(b, dtype=float)
    c = np.array(c, dtype=float)
    if max_iters is None:
        max_iters = 50 * (A.shape[0] + A.shape[1]) + 200

    flip = b < 0
    A[flip] *= -1.0
    b[flip] *= -1.0

    try:
        return _solve(A, b, c, basis, tol, max_iters, floor=1e-7)
    except (LpInfeasible, LpUnbounded, LpIterationLimit):
        raise
    except LpError:
        # walk collapsed numerically: retry once from phase one under
        # stricter pivot discipline
        return _solve(A, b, c, None, tol, max_iters, floor=1e-5)
