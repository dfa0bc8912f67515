# -*- coding=utf-8 -*-
from collections import namedtuple
import logging
import math

import numpy as np

logger = logging.getLogger(__name__)

__all__ = ["DEFAULT_QUERY_FRACTION", "QuerySplit", "split_queries"]

DEFAULT_QUERY_FRACTION = 0.1

QuerySplit = namedtuple("QuerySplit", ["queries", "data"])


def split_queries(values: np.ndarray, fraction=DEFAULT_QUERY_FRACTION, max_queries=None) -> QuerySplit:
    """
    The leading `floor(fraction * N)` rows become queries, the rest is searched. Data ids in result sets are
    offsets into `data`. `max_queries` only trims the query side.
    """
    if not 0 <= fraction < 1:
        raise ValueError(f"Query fraction must be in [0, 1), got {fraction!r}")

    count = math.floor(fraction * len(values))
    queries, data = values[:count], values[count:]
    if max_queries is not None:
        queries = queries[:max_queries]

    logger.info("Using %d queries against %d objects", len(queries), len(data))
    return QuerySplit(queries, data)
