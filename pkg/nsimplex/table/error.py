# -*- coding=utf-8 -*-
import logging

logger = logging.getLogger(__name__)

__all__ = ["MechanismNotBuiltError", "ExactnessViolationError"]


class MechanismNotBuiltError(LookupError):
    def __init__(self, mechanism):
        self.mechanism = mechanism

    def __str__(self):
        return f"Mechanism {self.mechanism.value!r} was not built"


class ExactnessViolationError(AssertionError):
    def __init__(self, query, threshold, expected_mechanism, expected, actual_mechanism, actual):
        self.query = query
        self.threshold = threshold
        self.expected_mechanism = expected_mechanism
        self.expected = expected
        self.actual_mechanism = actual_mechanism
        self.actual = actual

    def __str__(self):
        missing = sorted(set(self.expected) - set(self.actual))
        extra = sorted(set(self.actual) - set(self.expected))
        return (f"Query {self.query} at threshold {self.threshold!r}: {self.actual_mechanism} result set differs "
                f"from {self.expected_mechanism} (missing {missing[:10]!r}, extra {extra[:10]!r})")
