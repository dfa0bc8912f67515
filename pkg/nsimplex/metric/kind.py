# -*- coding=utf-8 -*-
import enum
import logging

from .error import UnsupportedMetricError

logger = logging.getLogger(__name__)

__all__ = ["MetricKind"]


class MetricKind(enum.Enum):
    EUCLIDEAN = "euclidean"
    COSINE = "cosine"
    JENSEN_SHANNON = "jensen_shannon"
    TRIANGULAR = "triangular"
    CHEBYSHEV = "chebyshev"

    @classmethod
    def from_name(cls, name: str):
        # Command line and definition files spell it `jensen-shannon`
        try:
            return cls(name.replace("-", "_").lower())
        except ValueError:
            raise UnsupportedMetricError(f"Unknown metric: {name!r}") from None

    @property
    def cli_name(self):
        return self.value.replace("_", "-")
