# -*- coding=utf-8 -*-
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
import logging
import math

import numpy as np

logger = logging.getLogger(__name__)

__all__ = ["DEFAULT_PAIRS", "DistortionReport", "NoUsablePairsError", "sample_pairs", "distortion_extrema",
           "measure_distortion"]

DEFAULT_PAIRS = 1000000
CHUNK_SIZE = 50000

DistortionReport = namedtuple("DistortionReport", ["dims", "mapping_name", "r", "D", "pairs_sampled",
                                                   "zero_pairs_skipped"])

# Per chunk: smallest and largest d/d', whether some pair had d' = 0 < d, skipped pairs, usable pairs
Extrema = namedtuple("Extrema", ["min_ratio", "max_ratio", "unbounded", "skipped", "usable"])


class NoUsablePairsError(ValueError):
    pass


def sample_pairs(count: int, pairs: int = DEFAULT_PAIRS, seed: int = 0):
    """
    Object index pairs (i < j). All pairs when there are no more than `pairs` of them, otherwise a seeded
    sample drawn with replacement.
    """
    if count < 2:
        raise NoUsablePairsError("At least two objects are required to sample pairs")

    if count * (count - 1) // 2 <= pairs:
        return np.triu_indices(count, k=1)

    rng = np.random.default_rng(seed)
    i = rng.integers(0, count, size=pairs)
    j = rng.integers(0, count - 1, size=pairs)
    # Shift to skip the diagonal, j is uniform over the other objects
    j = j + (j >= i)
    return np.minimum(i, j), np.maximum(i, j)


def distortion_extrema(d: np.ndarray, d_prime: np.ndarray) -> Extrema:
    skipped = (d == 0) & (d_prime == 0)
    usable = ~skipped
    unbounded = bool(np.any(usable & (d_prime == 0)))
    measurable = usable & (d_prime > 0)
    if np.any(measurable):
        ratios = d[measurable] / d_prime[measurable]
        min_ratio, max_ratio = float(np.min(ratios)), float(np.max(ratios))
    else:
        min_ratio, max_ratio = math.inf, -math.inf

    return Extrema(min_ratio, max_ratio, unbounded, int(np.count_nonzero(skipped)), int(np.count_nonzero(usable)))


def merge_extrema(extrema: [Extrema]) -> Extrema:
    return Extrema(min(e.min_ratio for e in extrema), max(e.max_ratio for e in extrema),
                   any(e.unbounded for e in extrema), sum(e.skipped for e in extrema),
                   sum(e.usable for e in extrema))


def measure_distortion(true_distance, surrogate_distance, pairs, mapping_name="", dims=0, workers=1,
                       chunk_size=CHUNK_SIZE) -> DistortionReport:
    """
    Smallest D such that r * d' <= d <= D * r * d' over the sampled pairs, with r the smallest d/d'.

    `true_distance` and `surrogate_distance` map two index arrays to the distances of the corresponding pairs.
    Pairs with d = d' = 0 are skipped; a pair with d' = 0 < d (or d = 0 < d') makes D infinite.
    """
    i, j = pairs

    def chunk(start):
        ci = i[start:start + chunk_size]
        cj = j[start:start + chunk_size]
        return distortion_extrema(np.asarray(true_distance(ci, cj)), np.asarray(surrogate_distance(ci, cj)))

    starts = range(0, len(i), chunk_size)
    if workers > 1:
        with ThreadPoolExecutor(workers) as executor:
            extrema = list(executor.map(chunk, starts))
    else:
        extrema = [chunk(start) for start in starts]

    if not extrema:
        raise NoUsablePairsError("No pairs were sampled")

    merged = merge_extrema(extrema)
    if merged.usable == 0:
        raise NoUsablePairsError("Every sampled pair has zero distance")

    if merged.skipped:
        logger.warning("%s: skipped %d pairs of coinciding objects", mapping_name, merged.skipped)

    if merged.unbounded or merged.min_ratio <= 0 or math.isinf(merged.min_ratio):
        r = merged.min_ratio if math.isfinite(merged.min_ratio) else 0.0
        return DistortionReport(dims, mapping_name, r, math.inf, len(i), merged.skipped)

    return DistortionReport(dims, mapping_name, merged.min_ratio, merged.max_ratio / merged.min_ratio, len(i),
                            merged.skipped)
