# -*- coding=utf-8 -*-
import logging

import numpy as np

from nsimplex.definition.schema import pivots_validator
from nsimplex.metric.spec import MetricSpec
from nsimplex.pivots.pivot_set import PivotSet, PivotStrategy

from .error import StoreError
from .sidecar import read_sidecar, write_sidecar

logger = logging.getLogger(__name__)

__all__ = ["pivots_sidecar", "pivots_from_sidecar", "save_pivots", "load_pivots"]


def pivots_sidecar(pivots: PivotSet):
    return {
        "pivot-strategy": pivots.strategy.value,
        "pivot-indices": pivots.indices,
        "pivot-points": pivots.points.tolist(),
        "seed": pivots.seed,
        "dims": pivots.n,
    }


def pivots_from_sidecar(path, sidecar, dimension: int) -> PivotSet:
    points = np.array(sidecar["pivot-points"], dtype=np.float64)
    if points.shape != (sidecar["dims"], dimension):
        raise StoreError(path, f"pivot points have shape {points.shape}, expected {(sidecar['dims'], dimension)}")

    return PivotSet(points, PivotStrategy(sidecar["pivot-strategy"]), sidecar.get("seed"),
                    sidecar.get("pivot-indices"))


def save_pivots(path, pivots: PivotSet, metric: MetricSpec):
    write_sidecar(path, {"metric": metric.name, **pivots_sidecar(pivots)})
    logger.info("Saved %d pivots to %s", pivots.n, path)


def load_pivots(path, metric: MetricSpec, dimension: int) -> PivotSet:
    sidecar = read_sidecar(path, pivots_validator)
    if sidecar["metric"] != metric.name:
        raise StoreError(path, f"pivots were selected for {sidecar['metric']}, not {metric.name}")

    return pivots_from_sidecar(path, sidecar, dimension)
