"""Modularity statistics and the modularity matrix ``B = X^T X - d d^T / (2m)`` as an implicit operator."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dpr1 import ALPHA_SEP_TOL, Y_TOL, Dpr1Problem, solve_dpr1
from .errors import ComponentCountTooLarge, DegenerateGraph, RankTooSmall
from .linalg import SvdFactors, as_data_matrix, as_vector, sign_fix

# 2m = ||Xe||^2 <= n ||X||_F^2; anything below this fraction of the bound is treated as zero.
DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class ModularityStats:
    """Degree vector ``d = X^T X e``, total degree ``two_m = d^T e`` and ``d_norm = ||d||_2``."""

    d: np.ndarray
    two_m: float
    d_norm: float

    @property
    def n(self) -> int:
        return self.d.shape[0]


@dataclass(frozen=True)
class ModularityEigenpairs:
    """Leading eigenpairs of B.

    Attributes
    ----------
    beta : (r,) ndarray
        Eigenvalues, strictly decreasing.
    b : (r, n) ndarray
        Row ``i`` is the unit eigenvector for ``beta[i]``.
    gamma : (r, k) ndarray
        Coefficients with ``b[i] = V @ gamma[i]``.
    """

    beta: np.ndarray
    b: np.ndarray
    gamma: np.ndarray


def stats(X) -> ModularityStats:
    """Degrees and total degree of the Gram similarity ``X^T X``, in O(pn)."""
    X = as_data_matrix(X)
    row_sums = X.sum(axis=1)
    d = X.T @ row_sums
    two_m = float(row_sums @ row_sums)
    bound = X.shape[1] * float(np.sum(X * X))
    if not two_m > DEGENERATE_TOL * bound:
        raise DegenerateGraph(
            f"total degree 2m = {two_m!r} is numerically zero (row sums of X vanish, e.g. centered data)"
        )
    return ModularityStats(d=d, two_m=two_m, d_norm=float(np.linalg.norm(d)))


def apply_B(X, st: ModularityStats, s) -> np.ndarray:
    """Return ``B s = X^T (X s) - d (d^T s) / (2m)`` without forming B."""
    X = as_data_matrix(X)
    s = as_vector(s, X.shape[1], "s")
    return X.T @ (X @ s) - st.d * ((st.d @ s) / st.two_m)


def modularity_score(X, st: ModularityStats, s) -> float:
    """Unscaled modularity ``Q(s) = s^T B s = ||X s||^2 - (d^T s)^2 / (2m)``."""
    X = as_data_matrix(X)
    s = as_vector(s, X.shape[1], "s")
    xs = X @ s
    ds = st.d @ s
    return float(xs @ xs - ds * ds / st.two_m)


def gram_has_negative_entries(X, block: int = 512) -> bool:
    """True if some dot product between two data points is negative.

    Nonnegative data short-circuits; otherwise the Gram matrix is scanned in
    column blocks so that at most ``block x n`` entries exist at once.
    """
    X = as_data_matrix(X)
    if X.min() >= 0:
        return False
    for start in range(0, X.shape[1], block):
        if (X[:, start : start + block].T @ X).min() < 0:
            return True
    return False


def degree_weights(factors: SvdFactors) -> np.ndarray:
    """``w = V^T d``, computed as ``alpha * (V^T e)`` since ``d = V diag(alpha) V^T e``.

    This keeps small components accurate relative to their own size.
    """
    return factors.alpha * factors.V.sum(axis=0)


def dpr1_problem(factors: SvdFactors, st: ModularityStats) -> tuple[Dpr1Problem, np.ndarray]:
    """The DPR1 form of B in the right-singular basis, and the weights ``w = V^T d``."""
    w = degree_weights(factors)
    w_norm = float(np.linalg.norm(w))
    problem = Dpr1Problem(alpha=factors.alpha, y=w / w_norm, rho=-(w_norm**2) / st.two_m)
    return problem, w


def leading_eigenpairs(
    factors: SvdFactors,
    st: ModularityStats,
    r: int | None = None,
    y_tol: float = Y_TOL,
    alpha_sep: float = ALPHA_SEP_TOL,
) -> ModularityEigenpairs:
    """Top `r` eigenpairs of B via the secular equation on the Gram spectrum.

    ``b_i = sum_j gamma_ij v_j`` with
    ``gamma_ij = (v_j^T d) / ((alpha_j - beta_i) ||d||)``; the rows of gamma
    are then rescaled so every ``b_i`` has unit norm and its largest-magnitude
    entry positive.
    """
    k = factors.rank
    if k < 2:
        raise RankTooSmall(f"data rank is {k}; at least 2 is needed for a modularity eigenvector")
    r = k - 1 if r is None else int(r)
    if r < 0 or r > k - 1:
        raise ComponentCountTooLarge(f"requested {r} eigenpairs but rank {k} allows at most {k - 1}")
    problem, w = dpr1_problem(factors, st)
    spectrum = solve_dpr1(problem, r, y_tol=y_tol, alpha_sep=alpha_sep)
    return eigenpairs_from_spectrum(factors, st, w, spectrum)


def eigenpairs_from_spectrum(factors: SvdFactors, st: ModularityStats, w: np.ndarray, spectrum) -> ModularityEigenpairs:
    """Lift a solved DPR1 spectrum back to eigenvectors of B (see `leading_eigenpairs`)."""
    gamma = w[None, :] / (spectrum.gaps * st.d_norm)
    gamma /= np.linalg.norm(gamma, axis=1, keepdims=True)
    b = gamma @ factors.V.T
    signs = sign_fix(b.T)
    return ModularityEigenpairs(beta=spectrum.beta, b=b * signs[:, None], gamma=gamma * signs[:, None])


def partition_by_sign(b) -> np.ndarray:
    """Two-way split: label 1 where ``b > 0``, else 0 (exact zeros go to group 0)."""
    return (np.asarray(b) > 0).astype(np.int64)
