# -*- coding=utf-8 -*-
import logging

import numpy as np

logger = logging.getLogger(__name__)

__all__ = ["HTreeLeaf", "HTreeNode"]


class HTreeLeaf:
    __slots__ = ("ids", "pivot")

    def __init__(self, ids: np.ndarray, pivot: int):
        self.ids = ids
        # Inherited pivot, always one of `ids`
        self.pivot = pivot

    def __repr__(self):
        return f"<HTreeLeaf size={len(self.ids)}>"


class HTreeNode:
    """
    Points nearer to `pivot_a` (ties included) are under `left`, the others under `right`. `pivot_a` is
    inherited from the parent (the root takes the first point), `pivot_b` is the farthest point from it.
    """

    __slots__ = ("pivot_a", "pivot_b", "d_ab", "cover_a", "cover_b", "left", "right")

    def __init__(self, pivot_a: int, pivot_b: int, d_ab: float, cover_a: float, cover_b: float):
        self.pivot_a = pivot_a
        self.pivot_b = pivot_b
        self.d_ab = d_ab
        self.cover_a = cover_a
        self.cover_b = cover_b
        self.left = None
        self.right = None

    def __repr__(self):
        return f"<HTreeNode {self.pivot_a}/{self.pivot_b} d_ab={self.d_ab!r}>"
