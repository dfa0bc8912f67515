# -*- coding=utf-8 -*-
import logging

logger = logging.getLogger(__name__)

__all__ = ["notify", "BenchmarkCellStart", "BenchmarkCellSuccess", "BenchmarkCellError", "DistortionMeasured"]


def notify(observer, message):
    result = None
    if observer is not None:
        try:
            result = observer(message)
        except Exception:
            logger.error("Unhandled exception in observer %r", observer, exc_info=True)

    return result


class ObserverMessage:
    pass


class BenchmarkCellStart(ObserverMessage):
    def __init__(self, mechanism, dims, threshold):
        self.mechanism = mechanism
        self.dims = dims
        self.threshold = threshold

    def __repr__(self):
        return f"<BenchmarkCellStart {self.mechanism} dims={self.dims} threshold={self.threshold!r}>"


class BenchmarkCellSuccess(ObserverMessage):
    def __init__(self, row):
        self.row = row

    def __repr__(self):
        return f"<BenchmarkCellSuccess {self.row!r}>"


class BenchmarkCellError(ObserverMessage):
    def __init__(self, mechanism, dims, threshold, error):
        self.mechanism = mechanism
        self.dims = dims
        self.threshold = threshold
        self.error = error

    def __repr__(self):
        return f"<BenchmarkCellError {self.mechanism} dims={self.dims} threshold={self.threshold!r}: {self.error}>"


class DistortionMeasured(ObserverMessage):
    def __init__(self, report):
        self.report = report

    def __repr__(self):
        return f"<DistortionMeasured {self.report!r}>"
