"""Label assignment from embeddings and label agreement scoring."""

from __future__ import annotations

import numpy as np
from scipy.optimize import linear_sum_assignment

KMEANS_MAX_ITER = 300
KMEANS_TOL = 1e-9


def kmeans_labels(embedding, k: int, seed: int = 0) -> np.ndarray:
    """Seeded k-means (k-means++ init, one run) on the columns of an (r, n) embedding."""
    from sklearn.cluster import KMeans

    points = np.asarray(embedding, dtype=np.float64).T
    km = KMeans(n_clusters=k, init="k-means++", n_init=1, max_iter=KMEANS_MAX_ITER, tol=KMEANS_TOL, random_state=seed)
    return km.fit_predict(points).astype(np.int64)


def label_agreement(labels, reference) -> float:
    """Fraction of points whose cluster matches the reference under the best one-to-one relabeling."""
    labels = np.asarray(labels)
    reference = np.asarray(reference)
    if labels.shape != reference.shape:
        raise ValueError("label vectors differ in length")
    if labels.size == 0:
        return 1.0
    ours, a = np.unique(labels, return_inverse=True)
    theirs, b = np.unique(reference, return_inverse=True)
    table = np.zeros((ours.size, theirs.size), dtype=np.int64)
    np.add.at(table, (a, b), 1)
    rows, cols = linear_sum_assignment(-table)
    return float(table[rows, cols].sum() / labels.size)
