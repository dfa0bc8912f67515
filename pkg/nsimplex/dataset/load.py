# -*- coding=utf-8 -*-
import logging
import os

import numpy as np

from .ascii import load_ascii, write_ascii
from .dataset import Dataset
from .vecs import load_binary_vecs, load_double_vecs, write_binary_vecs

logger = logging.getLogger(__name__)

__all__ = ["BINARY_VECS_EXTENSIONS", "load_dataset", "write_dataset"]

BINARY_VECS_EXTENSIONS = {".vecs", ".fvecs"}


def load_dataset(path) -> Dataset:
    extension = os.path.splitext(str(path))[1].lower()
    if extension in BINARY_VECS_EXTENSIONS:
        return load_binary_vecs(path)
    if extension == ".dvecs":
        return load_double_vecs(path)

    return load_ascii(path)


def write_dataset(path, values: np.ndarray):
    if os.path.splitext(str(path))[1].lower() in BINARY_VECS_EXTENSIONS:
        write_binary_vecs(path, values)
    else:
        write_ascii(path, values)
