# -*- coding=utf-8 -*-
import logging

from nsimplex.dataset.split import split_queries
from nsimplex.definition.definition import BenchmarkDefinition
from nsimplex.evaluation.benchmark import BenchRow, run_benchmark
from nsimplex.evaluation.threshold import calibrate_threshold

from .utils import definition_from_flags, exit_on_error, load_source, log_observer, write_csv

logger = logging.getLogger(__name__)

__all__ = ["bench"]

FLAGS = {
    "metric": "metric",
    "thresholds": "threshold",
    "target-fraction": "target_fraction",
    "dims": "dims",
    "mechanisms": "mechanism",
    "pivots": "pivots",
    "seeds": "seed",
    "query-fraction": "query_fraction",
    "max-queries": "max_queries",
    "leaf-capacity": "leaf_capacity",
    "workers": "workers",
}


def bench(args):
    with exit_on_error():
        definition = definition_from_flags(args, FLAGS, BenchmarkDefinition)

        values = load_source(definition.source, definition.metric)
        queries, data = split_queries(values, definition.query_fraction, definition.max_queries)

        thresholds = definition.thresholds
        if thresholds is None:
            thresholds = [calibrate_threshold(data, queries, definition.metric, definition.target_fraction,
                                              seed=definition.seeds[0])]

        rows = run_benchmark(data, queries, definition.metric, thresholds, definition.dims, definition.mechanisms,
                             definition.pivot_strategy, definition.seeds, definition.leaf_capacity,
                             definition.workers, log_observer)

        write_csv(rows, BenchRow._fields, args.out)
