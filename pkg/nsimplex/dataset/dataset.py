# -*- coding=utf-8 -*-
from collections import namedtuple
import enum
import logging

import numpy as np

logger = logging.getLogger(__name__)

__all__ = ["DatasetFormat", "DatasetFile", "Dataset"]


class DatasetFormat(enum.Enum):
    ASCII = "ascii"
    BINARY_VECS = "binary_vecs"


DatasetFile = namedtuple("DatasetFile", ["path", "format", "dimension", "count"])


class Dataset:
    def __init__(self, values: np.ndarray, source: DatasetFile = None):
        self.values = values
        self.source = source

    def __repr__(self):
        return f"<Dataset count={self.count} dimension={self.dimension}>"

    def __len__(self):
        return self.count

    @property
    def count(self):
        return len(self.values)

    @property
    def dimension(self):
        return self.values.shape[1] if self.values.ndim == 2 else 0
