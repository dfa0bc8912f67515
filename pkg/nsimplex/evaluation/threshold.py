# -*- coding=utf-8 -*-
import logging

import numpy as np

from nsimplex.metric.spec import MetricSpec

logger = logging.getLogger(__name__)

__all__ = ["calibrate_threshold"]


def calibrate_threshold(data: np.ndarray, queries: np.ndarray, metric: MetricSpec, target_fraction: float,
                        sample_queries=100, seed=0) -> float:
    """
    Threshold returning about `target_fraction` of `data` per query, estimated from the distances of a sample
    of queries to all of the data.
    """
    if not 0 < target_fraction < 1:
        raise ValueError("Target fraction must be between 0 and 1")

    rng = np.random.default_rng(seed)
    sample = queries[rng.choice(len(queries), size=min(sample_queries, len(queries)), replace=False)]
    distances = np.concatenate([metric.distances(query, data) for query in sample])
    threshold = float(np.quantile(distances, target_fraction))
    logger.info("Threshold %r returns about %r of the data", threshold, target_fraction)
    return threshold
