# -*- coding=utf-8 -*-
import logging

import numpy as np

from nsimplex.metric.counting import CountingMetric
from nsimplex.metric.spec import MetricSpec
from nsimplex.pivots.pivot_set import PivotSet
from nsimplex.simplex.bounds import SLACK_EPSILON

from .stats import QueryStats

logger = logging.getLogger(__name__)

__all__ = ["LaesaTable", "pivot_distances", "build_laesa", "laesa_limit", "l_seq_query"]


class LaesaTable:
    def __init__(self, pivots: PivotSet, rows: np.ndarray, object_ids: np.ndarray):
        self.pivots = pivots
        self.rows = rows
        self.object_ids = object_ids

    def __repr__(self):
        return f"<LaesaTable rows={len(self.rows)} n={self.pivots.n}>"

    @property
    def n(self):
        return self.pivots.n


def pivot_distances(data: np.ndarray, pivots: PivotSet, metric: MetricSpec) -> np.ndarray:
    """
    |data| x n matrix of object-to-pivot distances, object-contiguous. The kernels are exactly symmetric so
    computing it a pivot column at a time gives the same values as `metric.distances(value, pivots)`.
    """
    rows = np.empty((len(data), pivots.n))
    for i, pivot in enumerate(pivots.points):
        rows[:, i] = metric.distances(pivot, data)
    return rows


def build_laesa(data: np.ndarray, pivots: PivotSet, metric: MetricSpec) -> LaesaTable:
    table = LaesaTable(pivots, pivot_distances(data, pivots, metric), np.arange(len(data)))
    logger.debug("Built %r", table)
    return table


def laesa_limit(t: float, query_distances: np.ndarray) -> float:
    """
    Threshold for pivot distance differences, widened by the rounding of distances as large as the query's.
    """
    return t + SLACK_EPSILON * max(t, float(np.max(query_distances)))


def l_seq_query(table: LaesaTable, query: np.ndarray, t: float, metric: MetricSpec):
    """
    Rows whose Chebyshev distance to the query's pivot distances is within `t`. A row is abandoned at the
    first pivot column exceeding the threshold.
    """
    if t < 0:
        raise ValueError("Threshold must be non-negative")

    counting = CountingMetric(metric)
    query_distances = counting.distances(query, table.pivots.points)

    stats = QueryStats()
    limit = laesa_limit(t, query_distances)
    alive = np.arange(len(table.rows))
    stats.surrogate_calls = len(alive)
    for i in range(table.n):
        alive = alive[np.abs(table.rows[alive, i] - query_distances[i]) <= limit]

    stats.original_calls = counting.calls
    stats.candidates = len(alive)
    return table.object_ids[alive], stats
