# -*- coding=utf-8 -*-
import logging

import numpy as np

from nsimplex.pivots.eigen import principal_components

logger = logging.getLogger(__name__)

__all__ = ["jl_matrix", "jl_project", "pca_project"]


def jl_matrix(dimension: int, k: int, seed: int) -> np.ndarray:
    return np.random.default_rng(seed).normal(loc=0.0, scale=1.0 / np.sqrt(k), size=(dimension, k))


def jl_project(data: np.ndarray, k: int, seed: int, matrix: np.ndarray = None) -> np.ndarray:
    """
    Random Gaussian projection to `k` dimensions. `matrix` replaces the random one (tests use the identity).
    """
    if k < 1:
        raise ValueError("Target dimension must be positive")

    data = np.asarray(data, dtype=np.float64)
    if matrix is None:
        matrix = jl_matrix(data.shape[1], k, seed)

    return data @ matrix


def pca_project(data: np.ndarray, k: int) -> np.ndarray:
    data = np.asarray(data, dtype=np.float64)
    components = principal_components(data, k)
    return (data - np.mean(data, axis=0)) @ components.vectors.T
