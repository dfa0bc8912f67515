# -*- coding=utf-8 -*-
import logging

from nsimplex.dataset.split import split_queries
from nsimplex.definition.definition import DataSource
from nsimplex.htree.tree import build_tree
from nsimplex.metric.spec import get_metric
from nsimplex.pivots.pivot_set import PivotStrategy
from nsimplex.pivots.select import select_pivots
from nsimplex.store.pivots import load_pivots
from nsimplex.store.table import TableKind, save_table
from nsimplex.table.apex_table import build_apex_table
from nsimplex.table.laesa import build_laesa

from .utils import exit_on_error, load_source, UsageError

logger = logging.getLogger(__name__)

__all__ = ["build", "resolve_pivots"]


def resolve_pivots(args, data, metric):
    if args.pivot_file is not None:
        return load_pivots(args.pivot_file, metric, data.shape[1])

    if args.dims is None:
        raise UsageError("--dims or --pivot-file is required")

    return select_pivots(PivotStrategy(args.pivots), data, args.dims, args.seed, metric)


def build(args):
    with exit_on_error():
        metric = get_metric(args.metric)
        data = split_queries(load_source(DataSource(args.dataset), metric), args.query_fraction).data

        kind = TableKind(args.kind)
        if kind == TableKind.TREE:
            table = build_tree(data, metric, args.leaf_capacity)
            logger.info("Built %r: %r", table, table.stats())
        elif kind == TableKind.APEX:
            table = build_apex_table(data, resolve_pivots(args, data, metric), metric)
        else:
            table = build_laesa(data, resolve_pivots(args, data, metric), metric)

        save_table(args.out, table, metric)
