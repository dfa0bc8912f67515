# -*- coding=utf-8 -*-
import logging

import numpy as np

from .dataset import Dataset, DatasetFile, DatasetFormat
from .error import DatasetError, DatasetFormatError

logger = logging.getLogger(__name__)

__all__ = ["load_ascii", "write_ascii"]


def _read_lines(path):
    try:
        with open(path) as f:
            return [(number, line.split()) for number, line in enumerate(f, 1) if line.strip()]
    except (OSError, UnicodeDecodeError) as e:
        raise DatasetError(f"Unable to read {path}: {e!s}") from None


def _parse_int(token):
    try:
        return int(token)
    except ValueError:
        return None


def _header(lines):
    """
    `(count, dimension)` if the first line is a header, `None` otherwise. A header is exactly two integers, one
    of which equals the number of remaining lines; the other one must then match the row width.
    """
    if not lines:
        return None

    tokens = lines[0][1]
    if len(tokens) != 2:
        return None

    a, b = map(_parse_int, tokens)
    if a is None or b is None:
        return None

    rest = lines[1:]
    width = len(rest[0][1]) if rest else None
    for count, dimension in [(a, b), (b, a)]:
        if count == len(rest) and (width is None or dimension == width):
            return count, dimension

    return None


def load_ascii(path) -> Dataset:
    """
    Whitespace-separated reals, one vector per line. Blank lines are ignored.
    """
    lines = _read_lines(path)

    header = _header(lines)
    if header is not None:
        logger.debug("%s: consuming header %r", path, lines[0][1])
        lines = lines[1:]

    dimension = header[1] if header is not None else (len(lines[0][1]) if lines else 0)
    values = np.empty((len(lines), dimension), dtype=np.float64)
    for row, (number, tokens) in enumerate(lines):
        if len(tokens) != dimension:
            raise DatasetFormatError(path, f"expected {dimension} components, got {len(tokens)}", number)

        for column, token in enumerate(tokens):
            try:
                values[row, column] = float(token)
            except ValueError:
                raise DatasetFormatError(path, f"non-numeric token {token!r}", number) from None

    logger.info("Loaded %d vectors of dimension %d from %s", len(values), dimension, path)
    return Dataset(values, DatasetFile(str(path), DatasetFormat.ASCII, dimension, len(values)))


def write_ascii(path, values: np.ndarray, header=False):
    values = np.asarray(values, dtype=np.float64)
    with open(path, "w") as f:
        if header:
            f.write(f"{values.shape[0]} {values.shape[1]}\n")
        for row in values:
            f.write(" ".join(repr(float(value)) for value in row) + "\n")
