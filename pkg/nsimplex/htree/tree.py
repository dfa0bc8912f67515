# -*- coding=utf-8 -*-
from collections import namedtuple
import logging

import numpy as np

from nsimplex.metric.counting import CountingMetric
from nsimplex.metric.spec import MetricSpec
from nsimplex.table.stats import QueryStats

from .exclusion import Exclusion, UnsupportedExclusionError, can_exclude, pruning_radius
from .node import HTreeLeaf, HTreeNode

logger = logging.getLogger(__name__)

__all__ = ["DEFAULT_LEAF_CAPACITY", "HTree", "HTreeStats", "build_tree", "tree_range_query"]

DEFAULT_LEAF_CAPACITY = 16

HTreeStats = namedtuple("HTreeStats", ["nodes", "leaves", "depth"])


class HTree:
    """
    Monotone hyperplane tree over the rows of `points`, which may be original objects, LAESA rows or apex
    rows: the tree only sees `metric`.
    """

    def __init__(self, points: np.ndarray, metric: MetricSpec, leaf_capacity: int, root):
        self.points = points
        self.metric = metric
        self.leaf_capacity = leaf_capacity
        self.root = root

    def __repr__(self):
        return f"<HTree size={len(self.points)} metric={self.metric.kind.value}>"

    def walk(self):
        stack = [(self.root, 1)]
        while stack:
            node, depth = stack.pop()
            yield node, depth
            if isinstance(node, HTreeNode):
                stack.append((node.right, depth + 1))
                stack.append((node.left, depth + 1))

    def leaves(self):
        return [node for node, depth in self.walk() if isinstance(node, HTreeLeaf)]

    def stats(self) -> HTreeStats:
        nodes = leaves = depth = 0
        for node, node_depth in self.walk():
            if isinstance(node, HTreeLeaf):
                leaves += 1
            else:
                nodes += 1
            depth = max(depth, node_depth)
        return HTreeStats(nodes, leaves, depth)


def build_tree(points: np.ndarray, metric: MetricSpec, leaf_capacity=DEFAULT_LEAF_CAPACITY) -> HTree:
    if len(points) < 1:
        raise ValueError("Can't build a tree over no points")
    if leaf_capacity < 1:
        raise ValueError("Leaf capacity must be positive")

    ids = np.arange(len(points))
    root_pivot = 0
    # Explicit stack: partitions can be very unbalanced and recursion would hit the interpreter limit
    stack = [(ids, root_pivot, metric.distances(points[root_pivot], points), None, None)]
    root = None
    while stack:
        ids, pivot_a, distances_a, parent, side = stack.pop()

        farthest = int(np.argmax(distances_a))
        if len(ids) <= leaf_capacity or distances_a[farthest] == 0:
            node = HTreeLeaf(ids, pivot_a)
        else:
            pivot_b = int(ids[farthest])
            distances_b = metric.distances(points[pivot_b], points[ids])
            left = distances_a <= distances_b
            node = HTreeNode(pivot_a, pivot_b, float(distances_a[farthest]),
                             float(np.max(distances_a[left])), float(np.max(distances_b[~left])))
            stack.append((ids[~left], pivot_b, distances_b[~left], node, "right"))
            stack.append((ids[left], pivot_a, distances_a[left], node, "left"))

        if parent is None:
            root = node
        else:
            setattr(parent, side, node)

    tree = HTree(points, metric, leaf_capacity, root)
    logger.debug("Built %r: %r", tree, tree.stats())
    return tree


def check_exclusion(tree: HTree, exclusion: Exclusion):
    if exclusion == Exclusion.HILBERT and not tree.metric.has_npoint_property:
        raise UnsupportedExclusionError(f"Hilbert exclusion is not valid for {tree.metric.name}")


def tree_range_query(tree: HTree, query: np.ndarray, t: float, exclusion: Exclusion):
    """
    Ids of all and only the points within `t` of `query` under the tree's metric. Every tree distance
    evaluation is counted in `QueryStats.original_calls`; callers querying a re-indexed table move it to
    `surrogate_calls`.
    """
    if t < 0:
        raise ValueError("Threshold must be non-negative")
    check_exclusion(tree, exclusion)

    metric = CountingMetric(tree.metric)
    points = tree.points
    stats = QueryStats()
    result = []

    root = tree.root
    root_pivot = root.pivot if isinstance(root, HTreeLeaf) else root.pivot_a
    stack = [(root, metric.distance(query, points[root_pivot]))]
    while stack:
        node, d_a = stack.pop()
        stats.nodes_visited += 1

        if isinstance(node, HTreeLeaf):
            others = node.ids[node.ids != node.pivot]
            if d_a <= t:
                result.append(np.array([node.pivot]))
            if len(others):
                result.append(others[metric.distances(query, points[others]) <= t])
            continue

        d_b = metric.distance(query, points[node.pivot_b])
        radius = pruning_radius(t, node.d_ab)

        if not (d_b > node.cover_b + radius or can_exclude(exclusion, d_b, d_a, node.d_ab, radius)):
            stack.append((node.right, d_b))
        if not (d_a > node.cover_a + radius or can_exclude(exclusion, d_a, d_b, node.d_ab, radius)):
            stack.append((node.left, d_a))

    stats.original_calls = metric.calls
    ids = np.sort(np.concatenate(result)) if result else np.array([], dtype=np.int64)
    stats.results = len(ids)
    return ids, stats
