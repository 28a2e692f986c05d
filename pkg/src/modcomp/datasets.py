"""Synthetic Gaussian blob data in the p x n (columns are points) convention."""

from __future__ import annotations

import numpy as np

TWO_BLOB_CENTERS = np.array([[0.0, 0.0], [6.0, 6.0]])
TWO_BLOB_SHIFT = np.array([10.0, 2.0])

THREE_BLOB_CENTERS = np.array([[8.0, 0.0, 0.0], [0.0, 5.0, 0.0], [0.0, 0.0, 2.5]])
THREE_BLOB_SHIFT = np.array([2.0, 2.0, 3.0])


def blobs(centers, n: int, scale: float = 0.5, shift=None, seed: int = 0):
    """Isotropic Gaussian clusters of (nearly) equal size.

    Returns ``(X, labels)`` with ``X`` of shape (p, n). `shift` is added to
    every point, which is how the data are moved into the positive orthant.
    """
    centers = np.asarray(centers, dtype=np.float64)
    rng = np.random.default_rng(seed)
    labels = np.arange(n) % centers.shape[0]
    X = centers[labels] + scale * rng.standard_normal((n, centers.shape[1]))
    if shift is not None:
        X = X + np.asarray(shift, dtype=np.float64)
    return X.T.copy(), labels


def two_blobs(n: int = 60, seed: int = 0):
    """Two blobs at (0,0) and (6,6), sd 0.5, shifted into the positive quadrant.

    The shift is deliberately not along (1, 1): the modularity matrix removes
    the direction of the data sum, so a shift parallel to the line joining
    the centers would hide the split.
    """
    return blobs(TWO_BLOB_CENTERS, n, 0.5, TWO_BLOB_SHIFT, seed)


def three_blobs(n: int = 90, seed: int = 0):
    """Three blobs along the coordinate axes of R^3 at unequal distances, sd 0.5.

    Unequal distances keep the Gram eigenvalues apart; a symmetric layout
    makes the leading modularity eigenvalues nearly collide with them.
    """
    return blobs(THREE_BLOB_CENTERS, n, 0.5, THREE_BLOB_SHIFT, seed)
