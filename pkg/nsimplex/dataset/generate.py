# -*- coding=utf-8 -*-
import enum
import logging

import numpy as np

from .dataset import Dataset

logger = logging.getLogger(__name__)

__all__ = ["GeneratorKind", "generate_uniform", "generate_correlated", "generate_histograms", "generate"]

DEFAULT_INTRINSIC_DIMS = 4


class GeneratorKind(enum.Enum):
    UNIFORM = "uniform"
    CORRELATED = "correlated"
    HISTOGRAM = "histogram"


def _check_shape(count, dims):
    if count < 1 or dims < 1:
        raise ValueError(f"Count and dimension must be positive, got {count} and {dims}")


def generate_uniform(count: int, dims: int, seed: int) -> Dataset:
    _check_shape(count, dims)
    return Dataset(np.random.default_rng(seed).random((count, dims)))


def generate_correlated(count: int, dims: int, seed: int, intrinsic_dims=DEFAULT_INTRINSIC_DIMS) -> Dataset:
    """
    Non-negative vectors lying close to a random `intrinsic_dims`-dimensional subspace.
    """
    _check_shape(count, dims)
    if not 1 <= intrinsic_dims <= dims:
        raise ValueError(f"Intrinsic dimension must be between 1 and {dims}")

    rng = np.random.default_rng(seed)
    latent = rng.random((count, intrinsic_dims))
    mixing = rng.random((intrinsic_dims, dims))
    noise = rng.random((count, dims)) * 0.01
    return Dataset(latent @ mixing / intrinsic_dims + noise)


def generate_histograms(count: int, dims: int, seed: int, concentration=1.0) -> Dataset:
    """
    Rows sum to 1; every component is positive.
    """
    _check_shape(count, dims)
    values = np.random.default_rng(seed).dirichlet(np.full(dims, concentration), size=count)
    # Dirichlet sampling can underflow to exact zeros for small concentrations
    values = np.maximum(values, np.finfo(np.float64).tiny)
    return Dataset(values / np.sum(values, axis=1, keepdims=True))


def generate(kind: GeneratorKind, count: int, dims: int, seed: int) -> Dataset:
    if kind == GeneratorKind.CORRELATED:
        return generate_correlated(count, dims, seed, min(DEFAULT_INTRINSIC_DIMS, dims))
    if kind == GeneratorKind.HISTOGRAM:
        return generate_histograms(count, dims, seed)

    return generate_uniform(count, dims, seed)
