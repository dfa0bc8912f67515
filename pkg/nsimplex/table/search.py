# -*- coding=utf-8 -*-
import enum
import logging
import math

import numpy as np

from nsimplex.htree.exclusion import Exclusion
from nsimplex.htree.tree import DEFAULT_LEAF_CAPACITY, HTree, build_tree, tree_range_query
from nsimplex.metric.counting import CountingMetric
from nsimplex.metric.kind import MetricKind
from nsimplex.metric.spec import MetricSpec, get_metric
from nsimplex.pivots.pivot_set import PivotSet
from nsimplex.simplex.apex import project
from nsimplex.simplex.bounds import confirm_limit, filter_limit

from .apex_table import ApexTable, build_apex_table, n_seq_query, query_scale
from .error import MechanismNotBuiltError
from .laesa import LaesaTable, build_laesa, l_seq_query, laesa_limit
from .stats import QueryStats

logger = logging.getLogger(__name__)

__all__ = ["Mechanism", "SearchIndex", "recheck", "exact_range_query"]


class Mechanism(enum.Enum):
    SCAN = "scan"
    L_SEQ = "lseq"
    L_REI = "lrei"
    N_SEQ = "nseq"
    N_REI = "nrei"
    TREE = "tree"

    @property
    def needs_pivots(self):
        return self in (Mechanism.L_SEQ, Mechanism.L_REI, Mechanism.N_SEQ, Mechanism.N_REI)


def recheck(data: np.ndarray, ids: np.ndarray, query: np.ndarray, t: float, metric: MetricSpec, stats: QueryStats):
    """
    Original-space check of candidates, one metric evaluation each.
    """
    counting = CountingMetric(metric)
    passing = ids[counting.distances(query, data[ids]) <= t] if len(ids) else ids
    stats.original_calls += counting.calls
    stats.rechecked += len(ids)
    return passing


class SearchIndex:
    """
    Everything needed to answer exact range queries over `data` (prepared for `metric`) with any of the
    mechanisms it was built for.
    """

    def __init__(self, data: np.ndarray, metric: MetricSpec, pivots: PivotSet = None, laesa: LaesaTable = None,
                 apex_table: ApexTable = None, laesa_tree: HTree = None, apex_tree: HTree = None,
                 tree: HTree = None):
        self.data = data
        self.metric = metric
        self.pivots = pivots
        self.laesa = laesa
        self.apex_table = apex_table
        self.laesa_tree = laesa_tree
        self.apex_tree = apex_tree
        self.tree = tree

    def __repr__(self):
        return f"<SearchIndex size={len(self.data)} metric={self.metric.kind.value} mechanisms={self.mechanisms}>"

    @classmethod
    def build(cls, data: np.ndarray, metric: MetricSpec, mechanisms: [Mechanism], pivots: PivotSet = None,
              leaf_capacity=DEFAULT_LEAF_CAPACITY, index=None):
        """
        Builds what `mechanisms` need. Tables already present in `index` are reused.
        """
        mechanisms = set(mechanisms)
        if pivots is None and any(mechanism.needs_pivots for mechanism in mechanisms):
            raise ValueError("Table mechanisms require pivots")

        if index is None:
            index = cls(data, metric, pivots)
        if mechanisms & {Mechanism.L_SEQ, Mechanism.L_REI} and index.laesa is None:
            index.laesa = build_laesa(data, pivots, metric)
        if Mechanism.L_REI in mechanisms and index.laesa_tree is None:
            index.laesa_tree = build_tree(index.laesa.rows, get_metric(MetricKind.CHEBYSHEV), leaf_capacity)
        if mechanisms & {Mechanism.N_SEQ, Mechanism.N_REI} and index.apex_table is None:
            index.apex_table = build_apex_table(data, pivots, metric)
        if Mechanism.N_REI in mechanisms and index.apex_tree is None:
            index.apex_tree = build_tree(index.apex_table.rows, get_metric(MetricKind.EUCLIDEAN), leaf_capacity)
        if Mechanism.TREE in mechanisms and index.tree is None:
            index.tree = build_tree(data, metric, leaf_capacity)

        logger.info("Built %r", index)
        return index

    @property
    def mechanisms(self):
        built = {
            Mechanism.SCAN: True,
            Mechanism.L_SEQ: self.laesa is not None,
            Mechanism.L_REI: self.laesa_tree is not None,
            Mechanism.N_SEQ: self.apex_table is not None,
            Mechanism.N_REI: self.apex_tree is not None,
            Mechanism.TREE: self.tree is not None,
        }
        return [mechanism for mechanism in Mechanism if built[mechanism]]

    def query(self, mechanism: Mechanism, query: np.ndarray, t: float):
        if mechanism not in self.mechanisms:
            raise MechanismNotBuiltError(mechanism)
        if t < 0:
            raise ValueError("Threshold must be non-negative")

        if mechanism == Mechanism.SCAN:
            stats = QueryStats()
            # Every object is a candidate checked in the original space
            stats.candidates = len(self.data)
            ids = recheck(self.data, np.arange(len(self.data)), query, t, self.metric, stats)
        elif mechanism == Mechanism.L_SEQ:
            candidates, stats = l_seq_query(self.laesa, query, t, self.metric)
            ids = recheck(self.data, candidates, query, t, self.metric, stats)
        elif mechanism == Mechanism.L_REI:
            ids, stats = self._query_laesa_tree(query, t)
        elif mechanism == Mechanism.N_SEQ:
            confirmed, candidates, stats = n_seq_query(self.apex_table, query, t, self.metric)
            ids = np.concatenate([confirmed, recheck(self.data, candidates, query, t, self.metric, stats)])
        elif mechanism == Mechanism.N_REI:
            ids, stats = self._query_apex_tree(query, t)
        else:
            ids, stats = tree_range_query(
                self.tree, query, t, Exclusion.HILBERT if self.metric.has_npoint_property else Exclusion.TRIANGLE,
            )

        ids = np.sort(ids)
        stats.results = len(ids)
        return ids, stats

    def _query_laesa_tree(self, query, t):
        counting = CountingMetric(self.metric)
        query_distances = counting.distances(query, self.pivots.points)

        candidates, tree_stats = tree_range_query(self.laesa_tree, query_distances, laesa_limit(t, query_distances),
                                                 Exclusion.TRIANGLE)

        stats = QueryStats(original_calls=counting.calls, surrogate_calls=tree_stats.original_calls,
                           candidates=len(candidates), nodes_visited=tree_stats.nodes_visited)
        return recheck(self.data, self.laesa.object_ids[candidates], query, t, self.metric, stats), stats

    def _query_apex_tree(self, query, t):
        counting = CountingMetric(self.metric)
        query_apex = project(self.apex_table.base, self.pivots.points, query, counting).coords

        # Euclidean distance between apexes is the lower bound
        scale = query_scale(self.apex_table, query_apex)
        candidates, tree_stats = tree_range_query(self.apex_tree, query_apex, math.sqrt(filter_limit(t, scale)),
                                                  Exclusion.HILBERT)

        altitudes = self.apex_table.rows[candidates, -1]
        shared = np.sum((self.apex_table.rows[candidates, :-1] - query_apex[:-1]) ** 2, axis=1)
        confirmed = shared + (altitudes + query_apex[-1]) ** 2 <= confirm_limit(t, scale)

        stats = QueryStats(original_calls=counting.calls, surrogate_calls=tree_stats.original_calls,
                           candidates=len(candidates), confirmed_without_recheck=int(np.count_nonzero(confirmed)),
                           nodes_visited=tree_stats.nodes_visited)
        object_ids = self.apex_table.object_ids
        rechecked = recheck(self.data, object_ids[candidates[~confirmed]], query, t, self.metric, stats)
        return np.concatenate([object_ids[candidates[confirmed]], rechecked]), stats


def exact_range_query(index: SearchIndex, mechanism: Mechanism, query: np.ndarray, t: float):
    return index.query(mechanism, query, t)
