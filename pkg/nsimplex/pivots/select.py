# -*- coding=utf-8 -*-
import logging

import numpy as np

from nsimplex.metric.kind import MetricKind
from nsimplex.metric.spec import MetricSpec

from .eigen import principal_components
from .error import PivotSelectionError
from .pivot_set import PivotSet, PivotStrategy

logger = logging.getLogger(__name__)

__all__ = ["MAX_ATTEMPTS", "select_random", "select_pca", "select_pivots"]

MAX_ATTEMPTS = 100


def select_random(data: np.ndarray, n: int, seed: int, metric: MetricSpec) -> PivotSet:
    """
    `data` must already be prepared for `metric`. Indices are drawn without replacement; a draw with two
    coinciding pivots is thrown away and drawn again from the same generator.
    """
    if not 1 <= n <= len(data):
        raise PivotSelectionError(f"Can't select {n} pivots from {len(data)} objects")

    rng = np.random.default_rng(seed)
    for attempt in range(MAX_ATTEMPTS):
        indices = rng.choice(len(data), size=n, replace=False)
        points = data[indices]
        distances = metric.distance_matrix(points)
        if np.all(distances[np.triu_indices(n, k=1)] > 0):
            return PivotSet(points.copy(), PivotStrategy.RANDOM, seed, [int(i) for i in indices])

        logger.debug("Pivot draw %d contains coinciding objects, drawing again", attempt)

    raise PivotSelectionError(f"Could not draw {n} distinct pivots in {MAX_ATTEMPTS} attempts")


def select_pca(data: np.ndarray, n: int, metric: MetricSpec = None) -> PivotSet:
    if metric is not None and metric.kind != MetricKind.EUCLIDEAN:
        raise PivotSelectionError(f"PCA pivots require euclidean distance, not {metric.name}")

    try:
        components = principal_components(data, n)
    except ValueError as e:
        raise PivotSelectionError(str(e)) from None

    return PivotSet(components.vectors, PivotStrategy.PCA)


def select_pivots(strategy: PivotStrategy, data: np.ndarray, n: int, seed: int, metric: MetricSpec) -> PivotSet:
    if strategy == PivotStrategy.PCA:
        return select_pca(data, n, metric)

    return select_random(data, n, seed, metric)
