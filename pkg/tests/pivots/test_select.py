# -*- coding=utf-8 -*-
import numpy as np
import pytest

from nsimplex.dataset.generate import generate_correlated
from nsimplex.evaluation.mapping import compare_mappings, Mapping
from nsimplex.metric.spec import get_metric
from nsimplex.pivots.error import PivotSelectionError
from nsimplex.pivots.pivot_set import PivotStrategy
from nsimplex.pivots.select import select_pca, select_pivots, select_random
from nsimplex.utils.test import make_data

euclidean = get_metric("euclidean")


def test__select_random():
    data = make_data("euclidean", 1000, 8)

    pivots = select_random(data, 20, 0, euclidean)

    assert pivots.n == len(pivots) == 20
    assert pivots.strategy == PivotStrategy.RANDOM
    assert len(set(pivots.indices)) == 20
    assert np.array_equal(pivots.points, data[pivots.indices])
    distances = euclidean.distance_matrix(pivots.points)
    assert np.all(distances[np.triu_indices(20, k=1)] > 0)


def test__select_random__deterministic():
    data = make_data("euclidean", 1000, 8)

    assert select_random(data, 10, 7, euclidean).indices == select_random(data, 10, 7, euclidean).indices
    assert select_random(data, 10, 7, euclidean).indices != select_random(data, 10, 8, euclidean).indices


def test__select_random__whole_dataset():
    data = make_data("euclidean", 30, 4)

    assert sorted(select_random(data, 30, 0, euclidean).indices) == list(range(30))


def test__select_random__redraws_duplicates():
    data = np.vstack([np.zeros((10, 2)), np.eye(2)])

    pivots = select_random(data, 2, 0, euclidean)

    assert euclidean.distance(*pivots.points) > 0


def test__select_random__no_distinct_objects():
    with pytest.raises(PivotSelectionError):
        select_random(np.zeros((10, 2)), 2, 0, euclidean)


@pytest.mark.parametrize("n", [0, 11])
def test__select_random__invalid_count(n):
    with pytest.raises(PivotSelectionError):
        select_random(make_data("euclidean", 10, 2), n, 0, euclidean)


def test__select_pca():
    data = make_data("euclidean", 500, 10)

    pivots = select_pca(data, 3, euclidean)

    assert pivots.strategy == PivotStrategy.PCA
    assert pivots.indices is None
    assert np.allclose(np.linalg.norm(pivots.points, axis=1), 1.0)


def test__select_pca__less_distorting_than_random():
    good_seeds = 0
    for seed in range(3):
        data = generate_correlated(2000, 112, seed).values
        reports = compare_mappings(data, euclidean, [Mapping.NSIMPLEX_PCA, Mapping.NSIMPLEX_RANDOM], [5, 10, 15, 20],
                                   200000, seed)
        d = {(report.mapping_name, report.dims): report.D for report in reports}

        good_seeds += sum(d[("nsimplex-pca", n)] <= d[("nsimplex-random", n)] for n in [5, 10, 15, 20]) >= 3

    assert good_seeds >= 2


def test__select_pca__non_euclidean():
    with pytest.raises(PivotSelectionError):
        select_pca(make_data("cosine", 100, 5), 2, get_metric("cosine"))


def test__select_pca__too_many():
    with pytest.raises(PivotSelectionError):
        select_pca(make_data("euclidean", 100, 5), 6, euclidean)


def test__select_pivots():
    data = make_data("euclidean", 100, 5)

    assert select_pivots(PivotStrategy.PCA, data, 2, 0, euclidean).strategy == PivotStrategy.PCA
    assert select_pivots(PivotStrategy.RANDOM, data, 2, 0, euclidean).strategy == PivotStrategy.RANDOM


def test__pivot_set__prefix():
    pivots = select_random(make_data("euclidean", 100, 5), 6, 0, euclidean)

    prefix = pivots.prefix(3)

    assert prefix.indices == pivots.indices[:3]
    assert np.array_equal(prefix.points, pivots.points[:3])
