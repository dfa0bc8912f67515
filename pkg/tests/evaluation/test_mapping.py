# -*- coding=utf-8 -*-
import numpy as np
import pytest
from unittest.mock import Mock

from nsimplex.evaluation.distortion import measure_distortion, sample_pairs
from nsimplex.evaluation.mapping import compare_mappings, Mapping, surrogate_distance
from nsimplex.metric.spec import get_metric
from nsimplex.observer import DistortionMeasured
from nsimplex.utils.test import make_data


def distortion(mapping, data, metric, k, seed=0):
    spec = get_metric(metric)
    pairs = sample_pairs(len(data), 20000, seed)
    return measure_distortion(lambda i, j: spec.distances(data[i], data[j]),
                              surrogate_distance(mapping, data, spec, k, seed), pairs, mapping.value, k)


@pytest.mark.parametrize("metric", ["euclidean", "jensen-shannon", "triangular"])
def test__nsimplex_lower_bound_never_overestimates(metric):
    data = make_data(metric, 400, 12, seed=1)

    report = distortion(Mapping.NSIMPLEX_RANDOM, data, metric, 6)

    assert report.r >= 1 - 1e-9


def test__nsimplex_upper_bound_never_underestimates():
    data = make_data("euclidean", 400, 12, seed=2)

    report = distortion(Mapping.NSIMPLEX_UPPER, data, "euclidean", 6)

    assert report.r <= 1 + 1e-9
    assert report.D * report.r <= 1 + 1e-9


def test__mean_estimate_less_distorted_than_lower_bound():
    data = make_data("euclidean", 1000, 30, seed=3, kind="uniform")

    lower = distortion(Mapping.NSIMPLEX_RANDOM, data, "euclidean", 10)
    mean = distortion(Mapping.NSIMPLEX_MEAN, data, "euclidean", 10)

    assert mean.D < lower.D


def test__pca_less_distorted_than_jl():
    data = make_data("euclidean", 1000, 30, seed=4)

    assert distortion(Mapping.PCA, data, "euclidean", 5).D < distortion(Mapping.JL, data, "euclidean", 5).D


def test__distortion_decreases_with_pivots():
    data = make_data("euclidean", 1000, 30, seed=5)

    few = distortion(Mapping.NSIMPLEX_RANDOM, data, "euclidean", 2)
    many = distortion(Mapping.NSIMPLEX_RANDOM, data, "euclidean", 10)

    assert many.D <= few.D


@pytest.mark.parametrize("mapping", [Mapping.PCA, Mapping.JL, Mapping.NSIMPLEX_PCA])
def test__euclidean_only(mapping):
    with pytest.raises(ValueError):
        surrogate_distance(mapping, make_data("cosine", 50, 5), get_metric("cosine"), 2, 0)


def test__compare_mappings():
    data = make_data("euclidean", 200, 10, seed=6)
    observer = Mock()

    reports = compare_mappings(data, get_metric("euclidean"), [Mapping.NSIMPLEX_RANDOM, Mapping.JL], [2, 4],
                               pairs=5000, seed=1, observer=observer)

    assert [(report.mapping_name, report.dims) for report in reports] == [
        ("nsimplex-random", 2), ("jl", 2), ("nsimplex-random", 4), ("jl", 4),
    ]
    assert all(report.pairs_sampled == 5000 for report in reports)
    assert observer.call_count == 4
    assert isinstance(observer.call_args_list[0][0][0], DistortionMeasured)


def test__compare_mappings__deterministic():
    data = make_data("jensen-shannon", 200, 10, seed=7)
    metric = get_metric("jensen-shannon")

    assert (compare_mappings(data, metric, [Mapping.NSIMPLEX_MEAN], [3], pairs=1000, seed=2) ==
            compare_mappings(data, metric, [Mapping.NSIMPLEX_MEAN], [3], pairs=1000, seed=2))
