# -*- coding=utf-8 -*-
import logging

import numpy as np

from .dataset import Dataset, DatasetFile, DatasetFormat
from .error import DatasetError, DatasetFormatError, TruncatedRecordError

logger = logging.getLogger(__name__)

__all__ = ["load_binary_vecs", "write_binary_vecs", "load_double_vecs", "write_double_vecs"]

DIMENSION_DTYPE = np.dtype("<i4")
SINGLE_DTYPE = np.dtype("<f4")
DOUBLE_DTYPE = np.dtype("<f8")


def _record_dtype(dimension, value_dtype):
    return np.dtype([("dimension", DIMENSION_DTYPE), ("values", value_dtype, (dimension,))])


def _check_records(path, buffer, value_dtype):
    """
    Walks record headers one by one to report where a malformed file goes wrong.
    """
    offset = 0
    expected = None
    while offset < len(buffer):
        if offset + DIMENSION_DTYPE.itemsize > len(buffer):
            raise TruncatedRecordError(path, f"truncated dimension at byte {offset}")

        dimension = int(np.frombuffer(buffer, DIMENSION_DTYPE, 1, offset)[0])
        if dimension < 1:
            raise DatasetFormatError(path, f"invalid dimension {dimension} at byte {offset}")
        if expected is None:
            expected = dimension
        elif dimension != expected:
            raise DatasetFormatError(path, f"dimension {dimension} at byte {offset} does not match {expected}")

        offset += DIMENSION_DTYPE.itemsize + dimension * value_dtype.itemsize
        if offset > len(buffer):
            raise TruncatedRecordError(path, f"record of dimension {dimension} is truncated")


def _load(path, value_dtype, format_):
    try:
        with open(path, "rb") as f:
            buffer = f.read()
    except OSError as e:
        raise DatasetError(f"Unable to read {path}: {e!s}") from None

    if not buffer:
        return Dataset(np.empty((0, 0), dtype=np.float64), DatasetFile(str(path), format_, 0, 0))

    _check_records(path, buffer, value_dtype)

    dimension = int(np.frombuffer(buffer, DIMENSION_DTYPE, 1)[0])
    records = np.frombuffer(buffer, _record_dtype(dimension, value_dtype))
    values = records["values"].astype(np.float64)

    logger.info("Loaded %d vectors of dimension %d from %s", len(values), dimension, path)
    return Dataset(values, DatasetFile(str(path), format_, dimension, len(values)))


def _write(path, values, value_dtype):
    values = np.asarray(values)
    if values.ndim != 2 or values.shape[1] < 1:
        raise ValueError(f"Expected a non-empty two-dimensional array, got shape {values.shape}")

    records = np.empty(len(values), _record_dtype(values.shape[1], value_dtype))
    records["dimension"] = values.shape[1]
    records["values"] = values
    records.tofile(path)


def load_binary_vecs(path) -> Dataset:
    """
    Each record is a little-endian int32 dimension followed by that many little-endian float32 values. Values
    are widened to float64.
    """
    return _load(path, SINGLE_DTYPE, DatasetFormat.BINARY_VECS)


def write_binary_vecs(path, values: np.ndarray):
    _write(path, values, SINGLE_DTYPE)


def load_double_vecs(path) -> Dataset:
    """
    Same layout as `load_binary_vecs` with float64 values.
    """
    return _load(path, DOUBLE_DTYPE, DatasetFormat.BINARY_VECS)


def write_double_vecs(path, values: np.ndarray):
    _write(path, values, DOUBLE_DTYPE)
