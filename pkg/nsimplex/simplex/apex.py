# -*- coding=utf-8 -*-
import logging

import numpy as np

from .error import BaseMismatchError, NonEmbeddableError

logger = logging.getLogger(__name__)

__all__ = ["CLAMP_EPSILON", "Apex", "apex_coordinates", "add_apex", "add_apexes", "project", "check_same_base"]

CLAMP_EPSILON = 1e-10


class Apex:
    """
    The point in l2^n realizing an object's distances to the base vertices. The last coordinate is the
    altitude above the base hyperplane and is never negative.
    """

    __slots__ = ("coords", "base_token")

    def __init__(self, coords: np.ndarray, base_token: str):
        self.coords = coords
        self.base_token = base_token

    def __repr__(self):
        return f"<Apex n={len(self.coords)} altitude={self.altitude!r}>"

    @property
    def n(self):
        return len(self.coords)

    @property
    def altitude(self):
        return float(self.coords[-1])


def check_same_base(a: Apex, b: Apex):
    if a.base_token != b.base_token:
        raise BaseMismatchError()


def apex_coordinates(coords: np.ndarray, distances: np.ndarray, scale: float, clamp_epsilon=CLAMP_EPSILON):
    """
    Places one apex per row of `distances` over the base whose vertex rows are `coords` (n x (n - 1),
    lower triangular). Batched over objects so that a whole table and a single query go through
    identical arithmetic.
    """
    distances = np.atleast_2d(np.asarray(distances, dtype=np.float64))
    count, n = distances.shape

    # Radicands in [-clamp_epsilon * magnitude, 0) are floating point jitter
    magnitude = np.maximum(np.max(distances, axis=1), scale) ** 2
    tolerance = clamp_epsilon * magnitude

    result = np.zeros((count, n))
    result[:, 0] = distances[:, 0]
    for i in range(1, n):
        row = coords[i, :i]
        l_squared = np.sum((row - result[:, :i]) ** 2, axis=1)
        x = coords[i, i - 1]
        y = result[:, i - 1]
        moved = y - (distances[:, i] ** 2 - l_squared) / (2 * x)
        radicand = y ** 2 - moved ** 2

        negative = radicand < 0
        if np.any(negative):
            failing = np.flatnonzero(radicand < -tolerance)
            if len(failing):
                raise NonEmbeddableError(float(radicand[failing[0]]), index=int(failing[0]))

            logger.debug("Clamping %d slightly negative radicands at coordinate %d", np.count_nonzero(negative), i)
            radicand = np.where(negative, 0.0, radicand)

        result[:, i - 1] = moved
        result[:, i] = np.sqrt(radicand)

    return result


def add_apexes(base, distances, clamp_epsilon=CLAMP_EPSILON) -> np.ndarray:
    distances = np.atleast_2d(np.asarray(distances, dtype=np.float64))
    if distances.shape[1] != base.n:
        raise ValueError(f"Expected {base.n} distances per object, got {distances.shape[1]}")
    if np.any(distances < 0):
        raise ValueError("Distances must be non-negative")

    return apex_coordinates(base.coords, distances, base.scale, clamp_epsilon)


def add_apex(base, distances, clamp_epsilon=CLAMP_EPSILON) -> Apex:
    return Apex(add_apexes(base, [distances], clamp_epsilon)[0], base.token)


def project(base, pivots: np.ndarray, value: np.ndarray, metric) -> Apex:
    """
    Apex of `value` (already prepared for `metric`). Costs exactly `base.n` metric evaluations.
    """
    return add_apex(base, metric.distances(value, pivots))
