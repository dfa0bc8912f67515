# -*- coding=utf-8 -*-
from collections import namedtuple
import logging

import numpy as np

from .error import InvalidObjectsError, MetricError
from .spec import MetricSpec

logger = logging.getLogger(__name__)

__all__ = ["ValidationFailure", "ValidationReport", "validate_dataset"]

ValidationFailure = namedtuple("ValidationFailure", ["index", "reason"])


class ValidationReport:
    def __init__(self, metric: MetricSpec, failures: [ValidationFailure]):
        self.metric = metric
        self.failures = failures

    def __bool__(self):
        return bool(self.failures)

    def __len__(self):
        return len(self.failures)

    def __iter__(self):
        return iter(self.failures)

    def __str__(self):
        return "\n".join([f"Object {failure.index}: {failure.reason}" for failure in self.failures])

    @property
    def indices(self):
        return [failure.index for failure in self.failures]

    def raise_for_failures(self):
        if self.failures:
            raise InvalidObjectsError(self.metric.name, self.failures)


def validate_dataset(metric: MetricSpec, data) -> ValidationReport:
    failures = []
    dimension = None
    for index, values in enumerate(data):
        values = np.asarray(values, dtype=np.float64)

        if dimension is None:
            dimension = len(values)
        elif len(values) != dimension:
            failures.append(ValidationFailure(index, f"dimension {len(values)} != {dimension}"))
            continue

        try:
            metric.check(values)
        except MetricError as e:
            failures.append(ValidationFailure(index, str(e)))

    if failures:
        logger.debug("%d of the objects are not valid for %r", len(failures), metric)

    return ValidationReport(metric, failures)
