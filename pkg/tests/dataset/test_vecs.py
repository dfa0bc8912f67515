# -*- coding=utf-8 -*-
import struct

import numpy as np
import pytest

from nsimplex.dataset.dataset import DatasetFormat
from nsimplex.dataset.error import DatasetFormatError, TruncatedRecordError
from nsimplex.dataset.vecs import load_binary_vecs, load_double_vecs, write_binary_vecs, write_double_vecs


def write(tmp_path, content, name="data.vecs"):
    path = tmp_path / name
    path.write_bytes(content)
    return path


def test__load_single_record(tmp_path):
    dataset = load_binary_vecs(write(tmp_path, bytes.fromhex("02000000") + struct.pack("<ff", 1.0, 2.0)))

    assert dataset.values.dtype == np.float64
    assert dataset.values.tolist() == [[1.0, 2.0]]
    assert dataset.source.format == DatasetFormat.BINARY_VECS
    assert dataset.source.dimension == 2


def test__load_several_records(tmp_path):
    content = b"".join(struct.pack("<i3f", 3, *row) for row in [(1, 2, 3), (4, 5, 6), (0.5, 0.25, -1)])

    dataset = load_binary_vecs(write(tmp_path, content))

    assert dataset.values.tolist() == [[1, 2, 3], [4, 5, 6], [0.5, 0.25, -1]]


@pytest.mark.parametrize("content", [
    struct.pack("<iff", 2, 1.0, 2.0)[:-1],
    struct.pack("<iff", 2, 1.0, 2.0) + b"\x02\x00",
])
def test__truncated(tmp_path, content):
    with pytest.raises(TruncatedRecordError):
        load_binary_vecs(write(tmp_path, content))


def test__dimension_mismatch(tmp_path):
    content = struct.pack("<iff", 2, 1.0, 2.0) + struct.pack("<ifff", 3, 1.0, 2.0, 3.0)

    with pytest.raises(DatasetFormatError) as e:
        load_binary_vecs(write(tmp_path, content))

    assert not isinstance(e.value, TruncatedRecordError)
    assert "does not match 2" in str(e.value)


@pytest.mark.parametrize("dimension", [0, -1])
def test__invalid_dimension(tmp_path, dimension):
    with pytest.raises(DatasetFormatError):
        load_binary_vecs(write(tmp_path, struct.pack("<i", dimension)))


def test__empty_file(tmp_path):
    dataset = load_binary_vecs(write(tmp_path, b""))

    assert dataset.values.shape == (0, 0)


def test__write_binary_vecs_layout(tmp_path):
    path = tmp_path / "out.vecs"

    write_binary_vecs(path, np.array([[1.0, 2.0]]))

    assert path.read_bytes() == bytes.fromhex("02000000") + struct.pack("<ff", 1.0, 2.0)


def test__double_vecs_keep_every_bit(tmp_path):
    values = np.random.default_rng(0).random((4, 5))
    path = tmp_path / "out.dvecs"

    write_double_vecs(path, values)

    assert path.stat().st_size == 4 * (4 + 5 * 8)
    np.testing.assert_array_equal(load_double_vecs(path).values, values)


def test__write_rejects_one_dimensional(tmp_path):
    with pytest.raises(ValueError):
        write_binary_vecs(tmp_path / "out.vecs", np.array([1.0, 2.0]))
