"""Eigenpairs of a symmetric diagonal-plus-rank-one matrix ``diag(alpha) + rho * y y^T``, ``rho < 0``.

The eigenvalues are the roots of the secular function

    f(beta) = 1 + rho * sum_j y_j**2 / (alpha_j - beta),

which is strictly decreasing between consecutive poles when ``rho < 0`` and
every ``y_j != 0``. The root below ``alpha_i`` and above ``alpha_{i+1}`` is
therefore bracketed, and each eigenvector is ``(D - beta I)^{-1} y``.

Roots are found in a shifted variable ``tau = beta - origin`` where the origin
is the pole nearest to the root. Differences ``alpha_j - beta`` are then
computed as ``(alpha_j - origin) - tau`` without cancellation, which keeps the
eigenvector components accurate when a root hugs a pole.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ComponentCountTooLarge, ConvergenceFailure, PoleEvaluation, SeparationViolated
from .linalg import sign_fix

Y_TOL = 1e-12
ALPHA_SEP_TOL = 1e-10
MAX_ITER = 200

_EPS = np.finfo(np.float64).eps


@dataclass(frozen=True)
class Dpr1Problem:
    """``diag(alpha) + rho * y y^T`` with strictly decreasing `alpha`, unit `y` and ``rho < 0``."""

    alpha: np.ndarray
    y: np.ndarray
    rho: float

    def __post_init__(self):
        alpha = np.asarray(self.alpha, dtype=np.float64).ravel()
        y = np.asarray(self.y, dtype=np.float64).ravel()
        if alpha.shape != y.shape or alpha.size == 0:
            raise ValueError(f"alpha and y must be non-empty and equally long, got {alpha.shape} and {y.shape}")
        if not (np.all(np.isfinite(alpha)) and np.all(np.isfinite(y)) and np.isfinite(self.rho)):
            raise ValueError("alpha, y and rho must be finite")
        if np.any(np.diff(alpha) >= 0):
            raise SeparationViolated("alpha must be strictly decreasing")
        if abs(np.linalg.norm(y) - 1.0) > 1e-12:
            raise ValueError(f"y must have unit 2-norm, got {np.linalg.norm(y)!r}")
        if not self.rho < 0:
            raise ValueError(f"rho must be negative, got {self.rho!r}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "rho", float(self.rho))

    @property
    def k(self) -> int:
        return self.alpha.shape[0]


@dataclass(frozen=True)
class Dpr1Spectrum:
    """Largest roots and unit eigenvectors of a DPR1 problem.

    Attributes
    ----------
    beta : (r,) ndarray
        Roots in strictly decreasing order.
    vectors : (r, k) ndarray
        Row ``i`` is the unit eigenvector for ``beta[i]``.
    gaps : (r, k) ndarray
        ``alpha_j - beta_i``, evaluated in shifted coordinates.
    """

    beta: np.ndarray
    vectors: np.ndarray
    gaps: np.ndarray


def secular_value(problem: Dpr1Problem, beta: float) -> float:
    """Evaluate ``1 + rho * sum_j y_j**2 / (alpha_j - beta)``."""
    diff = problem.alpha - beta
    if np.any(np.abs(diff) < 1e-300):
        raise PoleEvaluation(f"beta={beta!r} coincides with a diagonal entry")
    return float(1.0 + problem.rho * np.sum(problem.y**2 / diff))


def check_separation(problem: Dpr1Problem, y_tol: float = Y_TOL, alpha_sep: float = ALPHA_SEP_TOL):
    """Raise SeparationViolated unless the roots strictly interlace the diagonal."""
    small = np.flatnonzero(np.abs(problem.y) <= y_tol)
    if small.size:
        raise SeparationViolated(f"rank-one weight y[{small[0]}] = {problem.y[small[0]]!r} is below {y_tol}")
    scale = np.max(np.abs(problem.alpha))
    close = np.flatnonzero(-np.diff(problem.alpha) <= alpha_sep * scale)
    if close.size:
        j = close[0]
        raise SeparationViolated(f"alpha[{j}] and alpha[{j + 1}] are closer than {alpha_sep} relative")


def solve_dpr1(
    problem: Dpr1Problem,
    num_roots: int | None = None,
    y_tol: float = Y_TOL,
    alpha_sep: float = ALPHA_SEP_TOL,
    max_iter: int = MAX_ITER,
) -> Dpr1Spectrum:
    """Largest `num_roots` eigenpairs of ``diag(alpha) + rho y y^T``.

    Root ``i`` lies strictly inside ``(alpha[i+1], alpha[i])``. Each is found
    by Newton's method on the secular function, falling back to bisection
    whenever a step leaves the current bracket or fails to halve it. All
    brackets are iterated together.

    Parameters
    ----------
    problem : Dpr1Problem
    num_roots : int, optional
        Number of roots wanted, at most ``k - 1``. Defaults to ``k - 1``.
    y_tol, alpha_sep : float
        Rejection thresholds for vanishing weights and for diagonal entries
        closer than ``alpha_sep * max|alpha|``.
    max_iter : int
        Iteration cap shared by all roots.

    Returns
    -------
    Dpr1Spectrum
    """
    k = problem.k
    r = k - 1 if num_roots is None else int(num_roots)
    if r < 0 or r > k - 1:
        raise ComponentCountTooLarge(f"num_roots must lie in [0, {k - 1}], got {r}")
    check_separation(problem, y_tol, alpha_sep)
    alpha, y, rho = problem.alpha, problem.y, problem.rho
    if r == 0:
        return Dpr1Spectrum(np.empty(0), np.empty((0, k)), np.empty((0, k)))

    y2 = y**2
    upper = alpha[:r]
    lower = alpha[1 : r + 1]
    half = 0.5 * (upper - lower)
    mid = lower + half
    f_mid = 1.0 + rho * np.sum(y2 / (alpha[None, :] - mid[:, None]), axis=1)
    # f decreases across the bracket, so f(mid) >= 0 puts the root in the upper half.
    near_upper = f_mid >= 0
    origin = np.where(near_upper, upper, lower)
    lo = np.where(near_upper, -half, 0.0)
    hi = np.where(near_upper, 0.0, half)
    delta = alpha[None, :] - origin[:, None]

    def evaluate(rows, t):
        """Secular value, derivative, and a bound on the rounding error of the value."""
        terms = y2 / (delta[rows] - t[:, None])
        err = 8 * _EPS * (1.0 - rho * np.sum(np.abs(terms), axis=1))
        return 1.0 + rho * np.sum(terms, axis=1), rho * np.sum(terms**2 / y2, axis=1), err

    all_rows = np.arange(r)
    tau = 0.5 * (lo + hi)
    g, gp, _ = evaluate(all_rows, tau)
    lo = np.where(g > 0, tau, lo)
    hi = np.where(g < 0, tau, hi)
    done = g == 0
    step = hi - lo
    step_old = step.copy()
    for _ in range(max_iter):
        rows = np.flatnonzero(~done)
        if rows.size == 0:
            break
        t, ga, gpa, lo_a, hi_a = tau[rows], g[rows], gp[rows], lo[rows], hi[rows]
        newton = t - ga / gpa
        # Newton only while it stays inside the bracket and its steps keep halving.
        use_newton = (newton > lo_a) & (newton < hi_a) & (np.abs(2 * ga) <= np.abs(step_old[rows] * gpa))
        bisect = lo_a + 0.5 * (hi_a - lo_a)
        t_new = np.where(use_newton, newton, bisect)
        step_old[rows] = step[rows]
        step[rows] = np.abs(t_new - t)
        scale = np.maximum(np.abs(lo_a), np.abs(hi_a))
        converged = (step[rows] <= 4 * _EPS * np.abs(t_new)) | (hi_a - lo_a <= 4 * _EPS * scale)

        g_new, gp_new, g_err = evaluate(rows, t_new)
        lo[rows] = np.where(g_new > 0, t_new, lo_a)
        hi[rows] = np.where(g_new < 0, t_new, hi_a)
        tau[rows], g[rows], gp[rows] = t_new, g_new, gp_new
        done[rows] = converged | (np.abs(g_new) <= g_err)
    else:
        if not done.all():
            raise ConvergenceFailure(f"secular root finder did not converge in {max_iter} iterations")

    beta = origin + tau
    bad = np.flatnonzero(~((lower < beta) & (beta < upper)))
    if bad.size:
        i = bad[0]
        raise SeparationViolated(f"root {i} is numerically indistinguishable from a diagonal entry")
    gaps = delta - tau[:, None]
    vectors = y[None, :] / gaps
    vectors /= np.linalg.norm(vectors, axis=1, keepdims=True)
    vectors *= sign_fix(vectors.T)[:, None]
    return Dpr1Spectrum(beta=beta, vectors=vectors, gaps=gaps)
