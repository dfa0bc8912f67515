# -*- coding=utf-8 -*-
import enum
import logging

import numpy as np

logger = logging.getLogger(__name__)

__all__ = ["PivotStrategy", "PivotSet"]


class PivotStrategy(enum.Enum):
    RANDOM = "random"
    PCA = "pca"


class PivotSet:
    def __init__(self, points: np.ndarray, strategy: PivotStrategy, seed=None, indices=None):
        self.points = points
        self.points.flags.writeable = False
        self.strategy = strategy
        self.seed = seed
        # Dataset indices, random strategy only: principal components are not dataset members
        self.indices = indices

    def __repr__(self):
        return f"<PivotSet {self.strategy.value} n={self.n}>"

    def __len__(self):
        return self.n

    @property
    def n(self):
        return len(self.points)

    def prefix(self, m: int):
        return PivotSet(self.points[:m].copy(), self.strategy, self.seed,
                        None if self.indices is None else self.indices[:m])
