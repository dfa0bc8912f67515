# -*- coding=utf-8 -*-
from collections import namedtuple
import logging

import numpy as np

from .distance import chebyshev, euclidean, jensen_shannon, triangular
from .error import *
from .kind import MetricKind

logger = logging.getLogger(__name__)

__all__ = ["MetricSpec", "metric_specs", "get_metric", "evaluate"]


class MetricSpec(namedtuple("MetricSpec", ["kind", "requires_nonnegative_input", "has_npoint_property",
                                           "normalization", "kernel"])):
    """
    One of the supported distance functions.

    Vectors handed to `distance`/`distances` must already have gone through `prepare`: normalization
    happens once at ingestion, the kernels themselves never branch on it.
    """

    __slots__ = ()

    def __repr__(self):
        return f"<MetricSpec {self.kind.value}>"

    @property
    def name(self):
        return self.kind.cli_name

    def check(self, values: np.ndarray):
        if not np.all(np.isfinite(values)):
            raise NonFiniteComponentError(int(np.flatnonzero(~np.isfinite(values))[0]))

        if self.requires_nonnegative_input and np.any(values < 0):
            raise NegativeComponentError(self.name, int(np.flatnonzero(values < 0)[0]))

        if self.normalization == "l1" and not np.sum(values) > 0:
            raise ZeroSumVectorError(self.name)

        if self.normalization == "l2" and not np.any(values != 0):
            raise ZeroSumVectorError(self.name)

    def prepare(self, values) -> np.ndarray:
        """
        Checks and normalizes a vector (1-D) or a stack of vectors (2-D) into float64.
        """
        values = np.array(values, dtype=np.float64)
        if values.ndim == 1:
            self.check(values)
        else:
            for row in values:
                self.check(row)

        if self.normalization == "l1":
            values = values / np.sum(values, axis=-1, keepdims=True)
        elif self.normalization == "l2":
            values = values / np.linalg.norm(values, axis=-1, keepdims=True)

        return values

    def distance(self, x: np.ndarray, y: np.ndarray) -> float:
        return float(self.kernel(x, y))

    def distances(self, x: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return self.kernel(x, ys)

    def distance_matrix(self, points: np.ndarray) -> np.ndarray:
        result = np.zeros((len(points), len(points)))
        for i in range(len(points)):
            result[i, i + 1:] = self.distances(points[i], points[i + 1:])
            result[i + 1:, i] = result[i, i + 1:]
        return result


metric_specs = {
    MetricKind.EUCLIDEAN: MetricSpec(MetricKind.EUCLIDEAN, False, True, None, euclidean),
    MetricKind.COSINE: MetricSpec(MetricKind.COSINE, False, True, "l2", euclidean),
    MetricKind.JENSEN_SHANNON: MetricSpec(MetricKind.JENSEN_SHANNON, True, True, "l1", jensen_shannon),
    MetricKind.TRIANGULAR: MetricSpec(MetricKind.TRIANGULAR, True, True, "l1", triangular),
    MetricKind.CHEBYSHEV: MetricSpec(MetricKind.CHEBYSHEV, False, False, None, chebyshev),
}


def get_metric(name) -> MetricSpec:
    if isinstance(name, MetricSpec):
        return name

    if not isinstance(name, MetricKind):
        name = MetricKind.from_name(name)

    return metric_specs[name]


def evaluate(metric: MetricSpec, x, y) -> float:
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise DimensionMismatchError(len(x), len(y))

    return metric.distance(metric.prepare(x), metric.prepare(y))
