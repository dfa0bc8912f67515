# -*- coding=utf-8 -*-
import logging

import numpy as np

logger = logging.getLogger(__name__)

__all__ = ["euclidean", "chebyshev", "jensen_shannon", "triangular"]

# Every kernel reduces over the last axis, so `x` against a single vector or against a stack of rows
# goes through the same code. Term order never depends on argument order which keeps them exactly symmetric.


def euclidean(x, y):
    return np.sqrt(np.sum((x - y) ** 2, axis=-1))


def chebyshev(x, y):
    return np.max(np.abs(x - y), axis=-1)


def _xlog2(x, m):
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(x > 0, x * np.log2(2 * x / m), 0.0)


def jensen_shannon(x, y):
    m = x + y
    jsd = 0.5 * np.sum(_xlog2(x, m) + _xlog2(y, m), axis=-1)
    return np.sqrt(np.maximum(jsd, 0.0))


def triangular(x, y):
    m = x + y
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(m > 0, (x - y) ** 2 / m, 0.0)
    return np.sqrt(np.sum(terms, axis=-1))
