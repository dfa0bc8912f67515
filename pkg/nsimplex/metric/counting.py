# -*- coding=utf-8 -*-
import logging

import numpy as np

from .spec import MetricSpec

logger = logging.getLogger(__name__)

__all__ = ["CountingMetric"]


class CountingMetric:
    """
    Same interface as `MetricSpec`, counting every distance evaluation. One instance per query, never shared.
    """

    def __init__(self, metric: MetricSpec):
        self.metric = metric
        self.calls = 0

    def __getattr__(self, item):
        return getattr(self.metric, item)

    def __repr__(self):
        return f"<CountingMetric {self.metric.kind.value} calls={self.calls}>"

    def distance(self, x: np.ndarray, y: np.ndarray) -> float:
        self.calls += 1
        return self.metric.distance(x, y)

    def distances(self, x: np.ndarray, ys: np.ndarray) -> np.ndarray:
        self.calls += len(ys)
        return self.metric.distances(x, ys)
