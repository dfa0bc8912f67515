# -*- coding=utf-8 -*-
import logging

logger = logging.getLogger(__name__)

__all__ = ["MetricError", "DimensionMismatchError", "NegativeComponentError", "ZeroSumVectorError",
           "NonFiniteComponentError", "UnsupportedMetricError", "InvalidObjectsError"]


class MetricError(ValueError):
    pass


class DimensionMismatchError(MetricError):
    def __init__(self, left, right):
        self.left = left
        self.right = right

    def __str__(self):
        return f"Dimension mismatch: {self.left} != {self.right}"


class NegativeComponentError(MetricError):
    def __init__(self, metric, component):
        self.metric = metric
        self.component = component

    def __str__(self):
        return f"{self.metric} requires non-negative input (component {self.component} is negative)"


class ZeroSumVectorError(MetricError):
    def __init__(self, metric):
        self.metric = metric

    def __str__(self):
        return f"{self.metric} can't normalize a zero vector"


class NonFiniteComponentError(MetricError):
    def __init__(self, component):
        self.component = component

    def __str__(self):
        return f"Component {self.component} is not finite"


class UnsupportedMetricError(MetricError):
    pass


class InvalidObjectsError(MetricError):
    def __init__(self, metric, failures):
        self.metric = metric
        self.failures = failures

    def __str__(self):
        return (f"{len(self.failures)} objects are not valid for {self.metric}: " +
                "; ".join([f"object {index}: {reason}" for index, reason in self.failures]))
