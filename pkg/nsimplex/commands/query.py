# -*- coding=utf-8 -*-
import logging
import sys

import yaml

from nsimplex.dataset.split import split_queries
from nsimplex.definition.definition import DataSource
from nsimplex.htree.tree import HTree
from nsimplex.metric.spec import get_metric
from nsimplex.store.table import load_table
from nsimplex.table.apex_table import ApexTable
from nsimplex.table.search import Mechanism, SearchIndex

from .build import resolve_pivots
from .utils import exit_on_error, load_source, UsageError

logger = logging.getLogger(__name__)

__all__ = ["query"]


def index_from_table(data, metric, table, mechanism, leaf_capacity):
    if isinstance(table, HTree):
        index = SearchIndex(data, metric, tree=table)
    elif isinstance(table, ApexTable):
        index = SearchIndex(data, metric, table.pivots, apex_table=table)
    else:
        index = SearchIndex(data, metric, table.pivots, laesa=table)

    if mechanism not in index.mechanisms:
        # Tree mechanisms over a stored table only need their tree built on top
        index = SearchIndex.build(data, metric, [mechanism], index.pivots, leaf_capacity, index)

    return index


def query(args):
    """
    Range query with row `--query-index` of the dataset file, the first searched row by default. Printed ids
    are row numbers in the file.
    """
    with exit_on_error():
        metric = get_metric(args.metric)
        values = load_source(DataSource(args.dataset), metric)
        queries, data = split_queries(values, args.query_fraction)

        query_index = len(queries) if args.query_index is None else args.query_index
        if not 0 <= query_index < len(values):
            raise UsageError(f"Query index must be between 0 and {len(values) - 1}")

        mechanism = Mechanism(args.mechanism)
        if args.table is not None:
            index = index_from_table(data, metric, load_table(args.table, data, metric), mechanism,
                                     args.leaf_capacity)
        else:
            pivots = resolve_pivots(args, data, metric) if mechanism.needs_pivots else None
            index = SearchIndex.build(data, metric, [mechanism], pivots, args.leaf_capacity)

        ids, stats = index.query(mechanism, values[query_index], args.threshold)

    yaml.safe_dump({"ids": (ids + len(queries)).tolist(), "stats": stats.as_dict()}, sys.stdout,
                   default_flow_style=None, sort_keys=False)
