# -*- coding=utf-8 -*-
from collections import namedtuple
import logging

import numpy as np

logger = logging.getLogger(__name__)

__all__ = ["EigenDecomposition", "jacobi_eigh", "covariance", "principal_components"]

EigenDecomposition = namedtuple("EigenDecomposition", ["values", "vectors"])


def jacobi_eigh(matrix, tolerance=1e-12, max_sweeps=100) -> EigenDecomposition:
    """
    Cyclic Jacobi rotations for a symmetric matrix. Returns eigenvalues in descending order and the matching
    unit eigenvectors as columns.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {a.shape}")

    n = len(a)
    v = np.eye(n)
    norm = np.linalg.norm(a)
    for sweep in range(max_sweeps):
        off = np.sqrt(max(np.sum(a ** 2) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= tolerance * max(norm, 1.0):
            break

        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0:
                    continue

                theta = (a[q, q] - a[p, p]) / (2 * a[p, q])
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta ** 2 + 1)) if theta != 0 else 1.0
                c = 1 / np.sqrt(t ** 2 + 1)
                s = t * c

                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap = a[p, :].copy()
                aq = a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq

                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        logger.warning("Jacobi eigen-solver did not converge in %d sweeps", max_sweeps)

    logger.debug("Jacobi eigen-solver finished after %d sweeps", sweep)

    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return EigenDecomposition(values[order], v[:, order])


def covariance(data: np.ndarray) -> np.ndarray:
    data = np.asarray(data, dtype=np.float64)
    centered = data - np.mean(data, axis=0)
    return centered.T @ centered / (len(data) - 1)


def principal_components(data: np.ndarray, k: int, rank_tolerance=1e-12) -> EigenDecomposition:
    """
    Top `k` eigenpairs of the covariance of `data`, each eigenvector signed so that its largest-magnitude
    component is positive.
    """
    data = np.asarray(data, dtype=np.float64)
    if len(data) < 2:
        raise ValueError("At least two objects are required to compute principal components")
    if not 1 <= k <= data.shape[1]:
        raise ValueError(f"Number of components must be between 1 and {data.shape[1]}")

    values, vectors = jacobi_eigh(covariance(data))

    usable = np.count_nonzero(values > rank_tolerance * max(values[0], 0.0))
    if usable < k:
        raise ValueError(f"Data has only {usable} principal components above tolerance, {k} requested")

    vectors = vectors[:, :k].T.copy()
    for vector in vectors:
        if vector[np.argmax(np.abs(vector))] < 0:
            vector *= -1

    return EigenDecomposition(values[:k], vectors)
