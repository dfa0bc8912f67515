# -*- coding=utf-8 -*-
import enum
import logging

import numpy as np

from nsimplex.metric.distance import euclidean
from nsimplex.metric.kind import MetricKind
from nsimplex.metric.spec import MetricSpec
from nsimplex.observer import DistortionMeasured, notify
from nsimplex.pivots.select import select_pca, select_random
from nsimplex.table.apex_table import build_apex_table

from .distortion import DEFAULT_PAIRS, DistortionReport, measure_distortion, sample_pairs
from .reduce import jl_project, pca_project

logger = logging.getLogger(__name__)

__all__ = ["Mapping", "surrogate_distance", "compare_mappings"]


class Mapping(enum.Enum):
    NSIMPLEX_RANDOM = "nsimplex-random"
    NSIMPLEX_PCA = "nsimplex-pca"
    NSIMPLEX_MEAN = "nsimplex-mean"
    NSIMPLEX_UPPER = "nsimplex-upper"
    PCA = "pca"
    JL = "jl"

    @property
    def euclidean_only(self):
        return self in (Mapping.NSIMPLEX_PCA, Mapping.PCA, Mapping.JL)


def _rows_distance(rows):
    return lambda i, j: euclidean(rows[i], rows[j])


def _apex_rows(data, k, seed, metric, pca):
    pivots = select_pca(data, k, metric) if pca else select_random(data, k, seed, metric)
    return build_apex_table(data, pivots, metric).rows


def surrogate_distance(mapping: Mapping, data: np.ndarray, metric: MetricSpec, k: int, seed: int):
    """
    Distance function over index pairs in the `k`-dimensional image of `data` under `mapping`.
    """
    if mapping.euclidean_only and metric.kind != MetricKind.EUCLIDEAN:
        raise ValueError(f"{mapping.value} only applies to euclidean data")

    if mapping == Mapping.PCA:
        return _rows_distance(pca_project(data, k))
    if mapping == Mapping.JL:
        return _rows_distance(jl_project(data, k, seed))

    rows = _apex_rows(data, k, seed, metric, mapping == Mapping.NSIMPLEX_PCA)
    if mapping in (Mapping.NSIMPLEX_RANDOM, Mapping.NSIMPLEX_PCA):
        return _rows_distance(rows)

    def bounds(i, j):
        shared = np.sum((rows[i, :-1] - rows[j, :-1]) ** 2, axis=-1)
        lower = np.sqrt(shared + (rows[i, -1] - rows[j, -1]) ** 2)
        upper = np.sqrt(shared + (rows[i, -1] + rows[j, -1]) ** 2)
        return lower, upper

    if mapping == Mapping.NSIMPLEX_UPPER:
        return lambda i, j: bounds(i, j)[1]

    return lambda i, j: sum(bounds(i, j)) / 2


def compare_mappings(data: np.ndarray, metric: MetricSpec, mappings: [Mapping], dims: [int], pairs=DEFAULT_PAIRS,
                     seed=0, workers=1, observer=None) -> [DistortionReport]:
    sampled = sample_pairs(len(data), pairs, seed)
    logger.info("Measuring distortion over %d pairs", len(sampled[0]))

    def true_distance(i, j):
        return metric.distances(data[i], data[j])

    reports = []
    for k in dims:
        for mapping in mappings:
            report = measure_distortion(true_distance, surrogate_distance(mapping, data, metric, k, seed), sampled,
                                        mapping.value, k, workers)
            notify(observer, DistortionMeasured(report))
            reports.append(report)

    return reports
