# -*- coding=utf-8 -*-
import enum
import logging

logger = logging.getLogger(__name__)

__all__ = ["EXCLUSION_EPSILON", "Exclusion", "UnsupportedExclusionError", "can_exclude", "pruning_radius"]

EXCLUSION_EPSILON = 1e-9


class Exclusion(enum.Enum):
    TRIANGLE = "triangle"
    HILBERT = "hilbert"


class UnsupportedExclusionError(ValueError):
    pass


def pruning_radius(t: float, d_ab: float) -> float:
    """
    Query radius exclusion tests use at a node whose pivots are `d_ab` apart. Covers the rounding of the exclusion
    inequalities for points exactly `t` away.
    """
    return t + EXCLUSION_EPSILON * max(t, d_ab)


def can_exclude(exclusion: Exclusion, d_near: float, d_far: float, d_ab: float, t: float) -> bool:
    """
    Whether the partition of pivot `near` can't contain anything within `t` of the query, given the query
    distances to that pivot (`d_near`) and to the opposite one (`d_far`).

    Note that the names describe the partition's pivot, the query itself is closer to `far` whenever this
    returns True.
    """
    if exclusion == Exclusion.HILBERT:
        return (d_near ** 2 - d_far ** 2) / (2 * d_ab) > t

    return (d_near - d_far) / 2 > t
