# -*- coding=utf-8 -*-
import logging

import numpy as np

from nsimplex.dataset.generate import generate_correlated, generate_histograms, generate_uniform
from nsimplex.metric.spec import get_metric

logger = logging.getLogger(__name__)

__all__ = ["SUPERMETRICS", "make_data", "brute_force_range", "exact_distances"]

SUPERMETRICS = ["euclidean", "cosine", "jensen-shannon", "triangular"]


def make_data(metric_name, count, dims, seed=0, kind=None):
    """
    Seeded data already prepared for `metric_name`: histograms for the probability metrics, correlated
    non-negative vectors otherwise.
    """
    metric = get_metric(metric_name)
    if kind == "uniform":
        dataset = generate_uniform(count, dims, seed)
    elif metric.normalization == "l1":
        dataset = generate_histograms(count, dims, seed)
    else:
        dataset = generate_correlated(count, dims, seed, min(4, dims))

    return metric.prepare(dataset.values)


def exact_distances(data, query, metric_name):
    return get_metric(metric_name).distances(query, data)


def brute_force_range(data, query, t, metric_name):
    return np.flatnonzero(exact_distances(data, query, metric_name) <= t)
