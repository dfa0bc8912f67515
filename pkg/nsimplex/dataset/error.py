# -*- coding=utf-8 -*-
import logging

logger = logging.getLogger(__name__)

__all__ = ["DatasetError", "DatasetFormatError", "TruncatedRecordError"]


class DatasetError(ValueError):
    pass


class DatasetFormatError(DatasetError):
    def __init__(self, path, error, line=None):
        self.path = path
        self.error = error
        self.line = line

    def __str__(self):
        if self.line is not None:
            return f"{self.path}:{self.line}: {self.error}"

        return f"{self.path}: {self.error}"


class TruncatedRecordError(DatasetFormatError):
    pass
