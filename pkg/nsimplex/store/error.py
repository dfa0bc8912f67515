# -*- coding=utf-8 -*-
import logging

logger = logging.getLogger(__name__)

__all__ = ["StoreError", "ChecksumMismatchError"]


class StoreError(ValueError):
    def __init__(self, path, error):
        self.path = path
        self.error = error

    def __str__(self):
        return f"{self.path}: {self.error}"


class ChecksumMismatchError(StoreError):
    def __init__(self, path, expected, actual):
        self.expected = expected
        self.actual = actual
        super().__init__(path, f"base checksum {actual} does not match stored {expected}")
