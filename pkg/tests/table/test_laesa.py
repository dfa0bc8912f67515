# -*- coding=utf-8 -*-
import numpy as np
import pytest

from nsimplex.metric.spec import get_metric
from nsimplex.pivots.pivot_set import PivotSet, PivotStrategy
from nsimplex.pivots.select import select_random
from nsimplex.table.laesa import build_laesa, l_seq_query, pivot_distances
from nsimplex.utils.test import SUPERMETRICS, brute_force_range, make_data


def test__build_laesa__single():
    table = build_laesa(np.array([[3.0, 4.0]]), PivotSet(np.array([[0.0, 0.0]]), PivotStrategy.RANDOM),
                        get_metric("euclidean"))

    assert table.rows.tolist() == [[5.0]]
    assert table.object_ids.tolist() == [0]


def test__pivot_distances__matches_per_object():
    metric = get_metric("jensen-shannon")
    data = make_data("jensen-shannon", 50, 6)
    pivots = select_random(data, 5, 0, metric)

    rows = pivot_distances(data, pivots, metric)

    for value, row in zip(data, rows):
        assert np.array_equal(metric.distances(value, pivots.points), row)


@pytest.mark.parametrize("metric", SUPERMETRICS)
def test__l_seq_query__no_false_dismissals(metric):
    spec = get_metric(metric)
    data = make_data(metric, 1000, 8, seed=1)
    queries = make_data(metric, 10, 8, seed=2)
    table = build_laesa(data, select_random(data, 6, 0, spec), spec)
    t = float(np.sort(spec.distances(queries[0], data))[10])

    for query in queries:
        candidates, stats = l_seq_query(table, query, t, spec)

        assert set(brute_force_range(data, query, t, metric)) <= set(candidates)
        assert stats.original_calls == 6
        assert stats.surrogate_calls == 1000
        assert stats.candidates == len(candidates)


def test__l_seq_query__negative_threshold():
    metric = get_metric("euclidean")
    data = make_data("euclidean", 10, 3)

    with pytest.raises(ValueError):
        l_seq_query(build_laesa(data, select_random(data, 2, 0, metric), metric), data[0], -0.1, metric)
