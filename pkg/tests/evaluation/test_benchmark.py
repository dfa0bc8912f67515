# -*- coding=utf-8 -*-
import numpy as np
import pytest
from unittest.mock import Mock

from nsimplex.evaluation.benchmark import BenchmarkCell, check_exactness, run_benchmark
from nsimplex.metric.spec import get_metric
from nsimplex.observer import BenchmarkCellStart, BenchmarkCellSuccess
from nsimplex.table.error import ExactnessViolationError
from nsimplex.table.search import Mechanism
from nsimplex.table.stats import QueryStats
from nsimplex.utils.test import make_data


def benchmark(**kwargs):
    data = make_data("euclidean", 600, 10, seed=1)
    queries = make_data("euclidean", 20, 10, seed=2)
    kwargs.setdefault("thresholds", [0.05, 0.1])
    kwargs.setdefault("dims", [4, 8])
    kwargs.setdefault("mechanisms", list(Mechanism))
    return run_benchmark(data, queries, get_metric("euclidean"), **kwargs)


def test__run_benchmark__rows():
    rows = benchmark()

    assert len(rows) == 2 * 2 * 6
    assert {(row.mechanism, row.dims, row.threshold) for row in rows} == {
        (mechanism.value, dims, threshold)
        for mechanism in Mechanism for dims in [4, 8] for threshold in [0.05, 0.1]
    }
    assert all(row.metric == "euclidean" and row.queries == 20 for row in rows)


def test__run_benchmark__scan_costs():
    rows = benchmark(mechanisms=[Mechanism.SCAN, Mechanism.N_SEQ])

    for row in rows:
        if row.mechanism == "scan":
            assert row.mean_original_calls == 600
            assert row.mean_surrogate_calls == 0
        else:
            assert row.mean_original_calls < 600
            assert row.mean_surrogate_calls == 600


def test__run_benchmark__results_agree():
    rows = benchmark(thresholds=[0.1])

    assert len({row.mean_results for row in rows}) == 1


def test__run_benchmark__deterministic():
    def strip(rows):
        return [row._replace(elapsed_seconds=None) for row in rows]

    assert strip(benchmark(seeds=[3])) == strip(benchmark(seeds=[3]))


def test__run_benchmark__seeds_averaged():
    rows = benchmark(seeds=[0, 1], dims=[4], thresholds=[0.1], mechanisms=[Mechanism.L_SEQ])

    assert len(rows) == 1


def test__run_benchmark__workers():
    def strip(rows):
        return [row._replace(elapsed_seconds=None) for row in rows]

    assert strip(benchmark(workers=4)) == strip(benchmark())


def test__run_benchmark__observer():
    observer = Mock()

    rows = benchmark(thresholds=[0.1], dims=[4], mechanisms=[Mechanism.SCAN, Mechanism.N_REI], observer=observer)

    messages = [call[0][0] for call in observer.call_args_list]
    assert sum(isinstance(message, BenchmarkCellStart) for message in messages) == 2
    assert [message.row for message in messages if isinstance(message, BenchmarkCellSuccess)] == rows


def test__run_benchmark__no_queries():
    with pytest.raises(ValueError):
        run_benchmark(np.ones((5, 2)), np.empty((0, 2)), get_metric("euclidean"), [0.1], [2], [Mechanism.SCAN])


def test__check_exactness():
    reference = BenchmarkCell(Mechanism.SCAN, 0, 0.1, [np.array([1, 2]), np.array([3])], QueryStats(), 0.0)
    cell = BenchmarkCell(Mechanism.N_SEQ, 4, 0.1, [np.array([1, 2]), np.array([3, 4])], QueryStats(), 0.0)

    with pytest.raises(ExactnessViolationError) as e:
        check_exactness(reference, cell)

    assert e.value.query == 1
    assert "extra [4]" in str(e.value)
