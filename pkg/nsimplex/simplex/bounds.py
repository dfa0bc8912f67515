# -*- coding=utf-8 -*-
from collections import namedtuple
import logging
import math

import numpy as np

from .apex import Apex, check_same_base

logger = logging.getLogger(__name__)

__all__ = ["SLACK_EPSILON", "BoundPair", "fused_bounds", "lower_bound", "upper_bound", "mean_estimate", "rows_bounds",
           "filter_limit", "confirm_limit"]

SLACK_EPSILON = 1e-9

BoundPair = namedtuple("BoundPair", ["lower", "upper", "terms"])


def fused_bounds(a: Apex, b: Apex) -> BoundPair:
    """
    Both bounds in one pass: the first n - 1 squared differences are shared, only the altitude term differs
    (same-side apexes for the lower bound, reflected ones for the upper bound).
    """
    check_same_base(a, b)

    x = a.coords
    y = b.coords
    shared = float(np.sum((x[:-1] - y[:-1]) ** 2))
    lower = shared + float(x[-1] - y[-1]) ** 2
    upper = shared + float(x[-1] + y[-1]) ** 2
    return BoundPair(math.sqrt(lower), math.sqrt(upper), len(x) + 1)


def lower_bound(a: Apex, b: Apex) -> float:
    return fused_bounds(a, b).lower


def upper_bound(a: Apex, b: Apex) -> float:
    return fused_bounds(a, b).upper


def mean_estimate(a: Apex, b: Apex) -> float:
    bounds = fused_bounds(a, b)
    return (bounds.lower + bounds.upper) / 2


def rows_bounds(rows: np.ndarray, query: np.ndarray):
    """
    Lower and upper bounds between every apex row of a table and one query apex.
    """
    shared = np.sum((rows[:, :-1] - query[:-1]) ** 2, axis=1)
    lower = np.sqrt(shared + (rows[:, -1] - query[-1]) ** 2)
    upper = np.sqrt(shared + (rows[:, -1] + query[-1]) ** 2)
    return lower, upper


def filter_limit(t: float, scale: float) -> float:
    """
    Squared threshold a lower bound is compared against. Bounds of objects lying in the pivots' flat equal their
    true distance up to rounding, rows within that rounding of `t` stay candidates.
    """
    return t * t + SLACK_EPSILON * max(t * t, scale * scale)


def confirm_limit(t: float, scale: float) -> float:
    """
    Squared threshold an upper bound must stay within for a row to be a result without a recheck.
    """
    return t * t - SLACK_EPSILON * max(t * t, scale * scale)
