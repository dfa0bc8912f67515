# -*- coding=utf-8 -*-
import numpy as np
import pytest

from nsimplex.evaluation.distortion import sample_pairs
from nsimplex.metric.spec import get_metric
from nsimplex.pivots.select import select_random
from nsimplex.simplex.apex import add_apex, Apex
from nsimplex.simplex.base import build_base
from nsimplex.simplex.bounds import fused_bounds
from nsimplex.simplex.error import NonEmbeddableError
from nsimplex.table.apex_table import build_apex_table
from nsimplex.utils.test import SUPERMETRICS, make_data

CHUNK = 100000


def pair_bounds(rows, i, j):
    shared = np.sum((rows[i, :-1] - rows[j, :-1]) ** 2, axis=1)
    lower = np.sqrt(shared + (rows[i, -1] - rows[j, -1]) ** 2)
    upper = np.sqrt(shared + (rows[i, -1] + rows[j, -1]) ** 2)
    return lower, upper


@pytest.mark.parametrize("n", [4, 10, 20])
@pytest.mark.parametrize("metric_name", SUPERMETRICS)
def test_bounds_sandwich_over_million_pairs(metric_name, n):
    metric = get_metric(metric_name)
    data = make_data(metric_name, 5000, 30)
    rows = build_apex_table(data, select_random(data, n, 0, metric), metric).rows
    i, j = sample_pairs(len(data), 1000000, 0)

    for start in range(0, len(i), CHUNK):
        ci, cj = i[start:start + CHUNK], j[start:start + CHUNK]
        d = metric.distances(data[ci], data[cj])
        lower, upper = pair_bounds(rows, ci, cj)

        assert np.all(lower <= d + 1e-9)
        assert np.all(d <= upper + 1e-9)


def test_bounds_converge_with_pivot_prefixes():
    metric = get_metric("euclidean")
    data = make_data("euclidean", 200, 40, kind="uniform")
    pivots = select_random(data, 30, 0, metric)
    full = build_apex_table(data, pivots, metric)
    i, j = np.triu_indices(len(data), k=1)

    previous_lower = np.zeros(len(i))
    previous_upper = np.full(len(i), np.inf)
    for m in range(2, 31):
        table = build_apex_table(data, pivots.prefix(m), metric, full.base.prefix(m))
        lower, upper = pair_bounds(table.rows, i, j)

        assert np.all(lower >= previous_lower - 1e-9)
        assert np.all(upper <= previous_upper + 1e-9)
        previous_lower, previous_upper = lower, upper


def test_add_apex_reproduces_distances():
    metric = get_metric("euclidean")
    rng = np.random.default_rng(0)
    pivots = rng.normal(size=(12, 20))
    base = build_base(metric.distance_matrix(pivots))
    vertices = np.array([base.vertex(k) for k in range(base.n)])

    for value in rng.normal(size=(10000, 20)):
        distances = metric.distances(value, pivots)
        apex = add_apex(base, distances)

        np.testing.assert_allclose(metric.distances(apex.coords, vertices), distances, rtol=1e-9)


def test_add_apex_rejects_unreachable_distances():
    base = build_base([[0, 2, 2], [2, 0, 2], [2, 2, 0]])

    with pytest.raises(NonEmbeddableError):
        add_apex(base, [1, 1, 1])


def test_upper_bound_is_not_zero_for_identical_objects():
    metric = get_metric("euclidean")
    data = make_data("euclidean", 1000, 30, kind="uniform")
    table = build_apex_table(data, select_random(data, 10, 0, metric), metric)

    off_flat = 0
    for row in table.rows:
        apex = Apex(row, "table")
        bounds = fused_bounds(apex, apex)
        assert bounds.lower == 0
        assert bounds.upper == pytest.approx(2 * row[-1], abs=1e-12)
        off_flat += bounds.upper > 0

    assert off_flat >= 990


def test_subspace_data_bounds_are_exact():
    metric = get_metric("euclidean")
    rng = np.random.default_rng(0)
    basis = np.linalg.qr(rng.normal(size=(32, 8)))[0].T
    data = rng.random((2000, 8)) * 0.5 @ basis + rng.random(32)
    pivots = select_random(data, 9, 0, metric)
    rows = build_apex_table(data, pivots, metric).rows
    i, j = sample_pairs(len(data), 100000, 0)

    d = metric.distances(data[i], data[j])
    lower, upper = pair_bounds(rows, i, j)

    assert np.max(np.abs(lower - d)) <= 1e-6
    assert np.max(np.abs(upper - d)) <= 1e-6
