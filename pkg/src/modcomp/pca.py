"""Centered-data PCA, kept minimal as a baseline for modularity components."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ComponentCountTooLarge, DimensionMismatch, IndexOutOfRange, TooFewPoints
from .linalg import as_data_matrix, sign_fix


@dataclass(frozen=True)
class PcaModel:
    """Principal components of column-centered data.

    Attributes
    ----------
    mean : (p,) ndarray
        Mean data point.
    components : (r, p) ndarray
        Orthonormal principal directions as rows.
    variances : (r,) ndarray
        Explained variances ``sigma_j**2 / (n - 1)``, non-increasing.
    scale : (p,) ndarray or None
        Per-attribute divisor when fitted with ``standardize=True``.
    """

    mean: np.ndarray
    components: np.ndarray
    variances: np.ndarray
    scale: np.ndarray | None = None
    advisories: tuple[str, ...] = ()

    @property
    def num_components(self) -> int:
        return self.components.shape[0]

    def center(self, X) -> np.ndarray:
        X = as_data_matrix(X)
        if X.shape[0] != self.mean.shape[0]:
            raise DimensionMismatch(f"model was fitted on {self.mean.shape[0]} attributes, X has {X.shape[0]}")
        Xc = X - self.mean[:, None]
        if self.scale is not None:
            Xc = Xc / self.scale[:, None]
        return Xc


def pca_fit(X, r: int, standardize: bool = False) -> PcaModel:
    """Top `r` principal components of `X` (p x n, columns are points)."""
    X = as_data_matrix(X)
    p, n = X.shape
    if n < 2:
        raise TooFewPoints(f"PCA needs at least 2 data points, got {n}")
    if not 0 <= r <= min(p, n - 1):
        raise ComponentCountTooLarge(f"r must lie in [0, {min(p, n - 1)}], got {r}")
    advisories = []
    mean = X.mean(axis=1)
    Xc = X - mean[:, None]
    scale = None
    if standardize:
        std = Xc.std(axis=1, ddof=1)
        scale = np.where(std > 0, std, 1.0)
        Xc = Xc / scale[:, None]
    U, s, _ = np.linalg.svd(Xc, full_matrices=False)
    U = U[:, :r]
    variances = s[:r] ** 2 / (n - 1)
    if r and not np.any(variances > 0):
        advisories.append("centered data has zero variance; components are arbitrary")
    components = (U * sign_fix(U)).T
    return PcaModel(mean, components, variances, scale, tuple(advisories))


def pca_embed(model: PcaModel, X, r: int | None = None) -> np.ndarray:
    """Scores ``components[:r] @ (X - mean)``, shape (r, n)."""
    r = model.num_components if r is None else int(r)
    if not 0 <= r <= model.num_components:
        raise IndexOutOfRange(f"cannot embed with {r} components; model has {model.num_components}")
    return model.components[:r] @ model.center(X)


def zero_count(X) -> int:
    """Number of exact zeros, used to show that centering destroys sparsity."""
    return int(np.count_nonzero(np.asarray(X) == 0))
