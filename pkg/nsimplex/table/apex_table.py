# -*- coding=utf-8 -*-
import logging

import numpy as np

from nsimplex.metric.counting import CountingMetric
from nsimplex.metric.spec import MetricSpec
from nsimplex.pivots.pivot_set import PivotSet
from nsimplex.simplex.apex import Apex, add_apexes, project
from nsimplex.simplex.base import SimplexBase, build_base
from nsimplex.simplex.bounds import confirm_limit, filter_limit

from .laesa import pivot_distances
from .stats import QueryStats

logger = logging.getLogger(__name__)

__all__ = ["ApexTable", "build_apex_table", "query_scale", "n_seq_query"]


class ApexTable:
    def __init__(self, base: SimplexBase, pivots: PivotSet, rows: np.ndarray, object_ids: np.ndarray):
        self.base = base
        self.pivots = pivots
        self.rows = rows
        self.object_ids = object_ids

    def __repr__(self):
        return f"<ApexTable rows={len(self.rows)} n={self.base.n}>"

    @property
    def n(self):
        return self.base.n

    def apex(self, j: int) -> Apex:
        return Apex(self.rows[j], self.base.token)


def build_apex_table(data: np.ndarray, pivots: PivotSet, metric: MetricSpec, base: SimplexBase = None) -> ApexTable:
    if base is None:
        base = build_base(metric.distance_matrix(pivots.points))

    table = ApexTable(base, pivots, add_apexes(base, pivot_distances(data, pivots, metric)), np.arange(len(data)))
    logger.debug("Built %r", table)
    return table


def query_scale(table: ApexTable, query_apex: np.ndarray) -> float:
    """
    Magnitude the rounding of the bounds is relative to. The first base vertex is the origin so the query apex
    norm is its distance to the first pivot.
    """
    return max(table.base.scale, float(np.linalg.norm(query_apex)))


def n_seq_query(table: ApexTable, query: np.ndarray, t: float, metric: MetricSpec):
    """
    Sequential scan of the apex table. Squared coordinate differences are accumulated column by column and a
    row is abandoned as soon as the accumulator exceeds t^2. Rows reaching the end get the upper bound
    checked first: those within `t` are confirmed, the rest are candidates for a recheck.

    Returns (confirmed ids, candidate ids, stats).
    """
    if t < 0:
        raise ValueError("Threshold must be non-negative")

    counting = CountingMetric(metric)
    query_apex = project(table.base, table.pivots.points, query, counting).coords

    stats = QueryStats()
    scale = query_scale(table, query_apex)
    lower_limit = filter_limit(t, scale)
    rows = table.rows
    alive = np.arange(len(rows))
    stats.surrogate_calls = len(alive)

    # First n - 1 terms are shared by both bounds
    accumulator = np.zeros(len(alive))
    for i in range(table.n - 1):
        accumulator = accumulator + (rows[alive, i] - query_apex[i]) ** 2
        keep = accumulator <= lower_limit
        alive = alive[keep]
        accumulator = accumulator[keep]

    altitudes = rows[alive, -1]
    lower = accumulator + (altitudes - query_apex[-1]) ** 2
    keep = lower <= lower_limit
    alive = alive[keep]
    upper = accumulator[keep] + (altitudes[keep] + query_apex[-1]) ** 2
    confirmed = upper <= confirm_limit(t, scale)

    stats.original_calls = counting.calls
    stats.confirmed_without_recheck = int(np.count_nonzero(confirmed))
    stats.candidates = len(alive)
    return table.object_ids[alive[confirmed]], table.object_ids[alive[~confirmed]], stats
