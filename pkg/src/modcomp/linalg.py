"""Dense matrix substrate: validation, thin SVD with rank detection, pseudoinverse application."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AllZeroMatrix, DimensionMismatch, NonFinite

DEFAULT_RANK_TOL = 1e-10


def as_data_matrix(X) -> np.ndarray:
    """Return `X` as a finite 2-D float64 array (p attributes x n points)."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise DimensionMismatch(f"data matrix must be 2-D, got shape {X.shape}")
    if X.shape[0] < 1 or X.shape[1] < 1:
        raise DimensionMismatch(f"data matrix must be non-empty, got shape {X.shape}")
    if not np.all(np.isfinite(X)):
        raise NonFinite("data matrix contains NaN or Inf")
    return X


def as_vector(b, n: int, name: str = "vector") -> np.ndarray:
    b = np.asarray(b, dtype=np.float64)
    if b.ndim != 1 or b.shape[0] != n:
        raise DimensionMismatch(f"{name} must have length {n}, got shape {b.shape}")
    return b


def sign_fix(vectors: np.ndarray) -> np.ndarray:
    """Per-column signs (+1/-1) making each column's largest-magnitude entry positive.

    Exact magnitude ties go to the lowest row index.
    """
    vectors = np.atleast_2d(vectors)
    if vectors.shape[0] == 0:
        return np.ones(vectors.shape[1])
    idx = np.argmax(np.abs(vectors), axis=0)
    picked = vectors[idx, np.arange(vectors.shape[1])]
    return np.where(picked < 0, -1.0, 1.0)


@dataclass(frozen=True)
class SvdFactors:
    """Thin SVD ``X = U diag(sigma) V^T`` truncated to the numerical rank.

    Attributes
    ----------
    U : (p, k) ndarray
        Left singular vectors as columns.
    sigma : (k,) ndarray
        Positive singular values, non-increasing.
    V : (n, k) ndarray
        Right singular vectors as columns.
    """

    U: np.ndarray
    sigma: np.ndarray
    V: np.ndarray

    @property
    def rank(self) -> int:
        return self.sigma.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.U.shape[0], self.V.shape[0]

    @property
    def alpha(self) -> np.ndarray:
        """Nonzero eigenvalues of the Gram matrix ``X^T X``."""
        return self.sigma**2


def thin_svd(X, rank_tol: float = DEFAULT_RANK_TOL) -> SvdFactors:
    """Thin SVD keeping singular triplets with ``sigma_j > rank_tol * sigma_1``.

    Signs are deterministic: the largest-magnitude entry of every left singular
    vector is positive and the matching right vector follows it.
    """
    X = as_data_matrix(X)
    if not 0.0 < rank_tol < 1.0:
        raise ValueError(f"rank_tol must lie in (0, 1), got {rank_tol}")
    U, s, Vt = np.linalg.svd(X, full_matrices=False)
    if s[0] == 0.0:
        raise AllZeroMatrix("data matrix is identically zero")
    k = int(np.count_nonzero(s > rank_tol * s[0]))
    U = U[:, :k]
    V = Vt[:k].T
    signs = sign_fix(U)
    return SvdFactors(U=U * signs, sigma=s[:k].copy(), V=V * signs)


def apply_pinv_left(factors: SvdFactors, b) -> np.ndarray:
    """Return ``(b^T X^+)^T = sum_j (v_j^T b / sigma_j) u_j`` without forming ``X^+``."""
    b = as_vector(b, factors.V.shape[0], "b")
    return factors.U @ ((factors.V.T @ b) / factors.sigma)
