# -*- coding=utf-8 -*-
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
import logging
import time

import numpy as np

from nsimplex.htree.tree import DEFAULT_LEAF_CAPACITY
from nsimplex.metric.spec import MetricSpec
from nsimplex.observer import BenchmarkCellError, BenchmarkCellStart, BenchmarkCellSuccess, notify
from nsimplex.pivots.pivot_set import PivotStrategy
from nsimplex.pivots.select import select_pivots
from nsimplex.table.error import ExactnessViolationError
from nsimplex.table.search import Mechanism, SearchIndex
from nsimplex.table.stats import QueryStats

logger = logging.getLogger(__name__)

__all__ = ["BenchRow", "BenchmarkCell", "run_cell", "run_benchmark"]

BenchRow = namedtuple("BenchRow", ["mechanism", "metric", "dims", "threshold", "queries", "mean_original_calls",
                                   "mean_surrogate_calls", "mean_results", "elapsed_seconds"])


class BenchmarkCell:
    """
    Outcome of running every query of one (mechanism, dims, threshold) combination.
    """

    def __init__(self, mechanism: Mechanism, dims: int, threshold: float, results: [np.ndarray],
                 stats: QueryStats, elapsed: float):
        self.mechanism = mechanism
        self.dims = dims
        self.threshold = threshold
        self.results = results
        self.stats = stats
        self.elapsed = elapsed

    def __repr__(self):
        return f"<BenchmarkCell {self.mechanism.value} dims={self.dims} threshold={self.threshold!r}>"


def run_cell(index: SearchIndex, mechanism: Mechanism, queries: np.ndarray, threshold: float, dims: int,
             workers=1) -> BenchmarkCell:
    def run_query(query):
        return index.query(mechanism, query, threshold)

    start = time.monotonic()
    if workers > 1:
        with ThreadPoolExecutor(workers) as executor:
            outcomes = list(executor.map(run_query, queries))
    else:
        outcomes = [run_query(query) for query in queries]
    elapsed = time.monotonic() - start

    stats = QueryStats()
    for ids, query_stats in outcomes:
        stats = stats + query_stats

    return BenchmarkCell(mechanism, dims, threshold, [ids for ids, query_stats in outcomes], stats, elapsed)


def check_exactness(reference: BenchmarkCell, cell: BenchmarkCell):
    for query, (expected, actual) in enumerate(zip(reference.results, cell.results)):
        if not np.array_equal(expected, actual):
            raise ExactnessViolationError(query, cell.threshold, reference.mechanism.value, expected.tolist(),
                                          cell.mechanism.value, actual.tolist())


def run_benchmark(data: np.ndarray, queries: np.ndarray, metric: MetricSpec, thresholds: [float], dims: [int],
                  mechanisms: [Mechanism], pivot_strategy=PivotStrategy.RANDOM, seeds=(0,),
                  leaf_capacity=DEFAULT_LEAF_CAPACITY, workers=1, observer=None) -> [BenchRow]:
    """
    Runs every query against every (mechanism, dims, threshold) and reports per-query means. Mechanisms that
    don't use pivots are run once per threshold and reported under every dims and seed. Result sets of all
    mechanisms must agree query by query; a mismatch raises `ExactnessViolationError`.
    """
    if not len(queries):
        raise ValueError("No queries to run")

    mechanisms = list(mechanisms)
    pivotless = [mechanism for mechanism in mechanisms if not mechanism.needs_pivots]
    with_pivots = [mechanism for mechanism in mechanisms if mechanism.needs_pivots]

    # (mechanism, dims, threshold) -> [BenchmarkCell], one per seed
    cells = {}
    # threshold -> first cell run for it, the one every other cell is compared with
    references = {}

    def run(index, mechanism, threshold, dims_):
        notify(observer, BenchmarkCellStart(mechanism.value, dims_, threshold))
        try:
            cell = run_cell(index, mechanism, queries, threshold, dims_, workers)
            reference = references.setdefault(threshold, cell)
            check_exactness(reference, cell)
        except Exception as e:
            notify(observer, BenchmarkCellError(mechanism.value, dims_, threshold, e))
            raise

        return cell

    # Nothing random goes into these, they run once
    pivotless_cells = {}
    if pivotless:
        index = SearchIndex.build(data, metric, pivotless, leaf_capacity=leaf_capacity)
        for threshold in thresholds:
            for mechanism in pivotless:
                pivotless_cells[(mechanism, threshold)] = run(index, mechanism, threshold, 0)

    for seed in seeds:
        for dims_ in dims:
            if with_pivots:
                pivots = select_pivots(pivot_strategy, data, dims_, seed, metric)
                index = SearchIndex.build(data, metric, with_pivots, pivots, leaf_capacity)

            for threshold in thresholds:
                for mechanism in mechanisms:
                    if mechanism.needs_pivots:
                        cell = run(index, mechanism, threshold, dims_)
                    else:
                        cell = pivotless_cells[(mechanism, threshold)]
                    cells.setdefault((mechanism, dims_, threshold), []).append(cell)

    rows = []
    for dims_ in dims:
        for threshold in thresholds:
            for mechanism in mechanisms:
                row = bench_row(metric, cells[(mechanism, dims_, threshold)], len(queries), dims_)
                notify(observer, BenchmarkCellSuccess(row))
                rows.append(row)

    return rows


def bench_row(metric: MetricSpec, cells: [BenchmarkCell], queries: int, dims: int) -> BenchRow:
    total = QueryStats()
    for cell in cells:
        total = total + cell.stats

    runs = queries * len(cells)
    return BenchRow(cells[0].mechanism.value, metric.name, dims, cells[0].threshold, queries,
                    total.original_calls / runs, total.surrogate_calls / runs, total.results / runs,
                    sum(cell.elapsed for cell in cells) / len(cells))
