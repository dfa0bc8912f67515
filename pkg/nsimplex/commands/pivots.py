# -*- coding=utf-8 -*-
import logging

from nsimplex.dataset.split import split_queries
from nsimplex.definition.definition import DataSource
from nsimplex.metric.spec import get_metric
from nsimplex.pivots.pivot_set import PivotStrategy
from nsimplex.pivots.select import select_pivots
from nsimplex.store.pivots import save_pivots

from .utils import exit_on_error, load_source

logger = logging.getLogger(__name__)

__all__ = ["pivots"]


def pivots(args):
    with exit_on_error():
        metric = get_metric(args.metric)
        data = split_queries(load_source(DataSource(args.dataset), metric), args.query_fraction).data
        pivot_set = select_pivots(PivotStrategy(args.pivots), data, args.dims, args.seed, metric)
        save_pivots(args.out, pivot_set, metric)
