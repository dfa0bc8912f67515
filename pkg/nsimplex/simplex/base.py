# -*- coding=utf-8 -*-
import hashlib
import logging
import uuid

import numpy as np

from .apex import CLAMP_EPSILON, apex_coordinates
from .error import DegeneratePivotsError, InvalidDistanceMatrixError, NonEmbeddableError

logger = logging.getLogger(__name__)

__all__ = ["DEGENERATE_EPSILON", "SimplexBase", "build_base"]

DEGENERATE_EPSILON = 1e-9


class SimplexBase:
    """
    Vertices of the base simplex, one row per pivot, in l2^(n - 1). Row i has zeros from column i on
    (0-based), its last non-zero entry being the altitude of pivot i over its predecessors.
    """

    def __init__(self, coords: np.ndarray, pivot_distances: np.ndarray):
        self.coords = coords
        self.coords.flags.writeable = False
        self.pivot_distances = pivot_distances
        self.pivot_distances.flags.writeable = False
        self.token = uuid.uuid4().hex

    def __repr__(self):
        return f"<SimplexBase n={self.n}>"

    @property
    def n(self):
        return len(self.coords)

    @property
    def scale(self):
        return float(np.max(self.pivot_distances)) if self.n > 1 else 0.0

    @property
    def altitudes(self):
        return np.array([self.coords[i, i - 1] for i in range(1, self.n)])

    @property
    def min_altitude(self):
        altitudes = self.altitudes
        return float(np.min(altitudes)) if len(altitudes) else 0.0

    @property
    def checksum(self):
        return hashlib.sha256(np.ascontiguousarray(self.coords).tobytes()).hexdigest()

    def prefix(self, m: int):
        """
        Base over the first `m` pivots. The construction is inductive so this is just a sub-matrix.
        """
        if not 1 <= m <= self.n:
            raise ValueError(f"Prefix size must be between 1 and {self.n}")

        return SimplexBase(self.coords[:m, :m - 1].copy(), self.pivot_distances[:m, :m].copy())

    def vertex(self, i: int) -> np.ndarray:
        """
        Row `i` zero-extended to l2^n, i.e. the apex a pivot gets for itself.
        """
        return np.append(self.coords[i], 0.0)


def check_distance_matrix(distances: np.ndarray):
    if distances.ndim != 2 or distances.shape[0] != distances.shape[1]:
        raise InvalidDistanceMatrixError(f"Distance matrix must be square, got shape {distances.shape}")

    if not np.all(np.isfinite(distances)):
        raise InvalidDistanceMatrixError("Distance matrix contains non-finite values")

    if np.any(np.diag(distances) != 0):
        raise InvalidDistanceMatrixError("Distance matrix must have zero diagonal")

    if not np.allclose(distances, distances.T, rtol=1e-12, atol=0):
        raise InvalidDistanceMatrixError("Distance matrix must be symmetric")

    if np.any(distances < 0):
        raise InvalidDistanceMatrixError("Distance matrix contains negative distances")

    # Duplicate pivots: report the later one of the first coinciding pair so callers can re-sample it
    i, j = np.nonzero(np.triu(distances == 0, k=1))
    if len(j):
        raise DegeneratePivotsError(int(np.min(j)), 0.0)


def build_base(distances, clamp_epsilon=CLAMP_EPSILON, degenerate_epsilon=DEGENERATE_EPSILON) -> SimplexBase:
    distances = np.array(distances, dtype=np.float64)
    check_distance_matrix(distances)
    distances = np.triu(distances) + np.triu(distances, k=1).T

    n = len(distances)
    if n == 0:
        raise InvalidDistanceMatrixError("At least one pivot is required")

    scale = float(np.max(distances))
    coords = np.zeros((n, n - 1))
    if n >= 2:
        coords[1, 0] = distances[0, 1]

    for k in range(2, n):
        try:
            row = apex_coordinates(coords[:k, :k - 1], distances[k:k + 1, :k], scale, clamp_epsilon)[0]
        except NonEmbeddableError as e:
            raise NonEmbeddableError(e.radicand, pivot_index=k) from None

        altitude = row[k - 1]
        if altitude < degenerate_epsilon * scale:
            raise DegeneratePivotsError(k, float(altitude))

        coords[k, :k] = row

    base = SimplexBase(coords, distances)
    logger.debug("Built base simplex over %d pivots, smallest altitude %r", n, base.min_altitude)
    return base
