# -*- coding=utf-8 -*-
import numpy as np
import pytest

from nsimplex.metric.spec import get_metric
from nsimplex.pivots.select import select_random
from nsimplex.simplex.apex import project
from nsimplex.table.apex_table import build_apex_table, n_seq_query
from nsimplex.utils.test import SUPERMETRICS, brute_force_range, make_data


def test__build_apex_table():
    metric = get_metric("euclidean")
    data = make_data("euclidean", 100, 8)
    pivots = select_random(data, 5, 0, metric)

    table = build_apex_table(data, pivots, metric)

    assert table.rows.shape == (100, 5)
    assert np.all(table.rows[:, -1] >= 0)
    assert np.array_equal(table.apex(17).coords, project(table.base, pivots.points, data[17], metric).coords)


@pytest.mark.parametrize("metric", SUPERMETRICS)
@pytest.mark.parametrize("n", [4, 10])
def test__n_seq_query__exact_split(metric, n):
    spec = get_metric(metric)
    data = make_data(metric, 1000, 12, seed=n)
    queries = make_data(metric, 10, 12, seed=n + 100)
    table = build_apex_table(data, select_random(data, n, 0, spec), spec)
    t = float(np.sort(spec.distances(queries[0], data))[10])

    for query in queries:
        confirmed, candidates, stats = n_seq_query(table, query, t, spec)
        expected = set(brute_force_range(data, query, t, metric))

        # Confirmed ids are results without any recheck, nothing outside both sets is a result
        assert set(confirmed) <= expected
        assert expected <= set(confirmed) | set(candidates)
        assert not set(confirmed) & set(candidates)
        assert stats.original_calls == n
        assert stats.confirmed_without_recheck == len(confirmed)
        assert stats.candidates == len(confirmed) + len(candidates)


def test__n_seq_query__threshold_zero():
    metric = get_metric("euclidean")
    data = make_data("euclidean", 100, 6)
    table = build_apex_table(data, select_random(data, 4, 0, metric), metric)

    confirmed, candidates, stats = n_seq_query(table, data[42], 0.0, metric)

    assert 42 in set(confirmed) | set(candidates)


@pytest.mark.parametrize("metric", ["euclidean", "cosine"])
def test__n_seq_query__threshold_on_stored_distance(metric):
    # 11 pivots in 10 dimensions: every object lies in the pivots' flat and both bounds equal the distance
    spec = get_metric(metric)
    data = make_data(metric, 500, 10, kind="uniform")
    table = build_apex_table(data, select_random(data, 11, 0, spec), spec)

    for query in make_data(metric, 30, 10, seed=1, kind="uniform"):
        distances = spec.distances(query, data)
        j = int(np.argsort(distances)[5])

        confirmed, candidates, stats = n_seq_query(table, query, float(distances[j]), spec)
        assert j in set(confirmed) | set(candidates)

        confirmed, candidates, stats = n_seq_query(table, query, float(np.nextafter(distances[j], 0)), spec)
        assert j not in set(confirmed)
