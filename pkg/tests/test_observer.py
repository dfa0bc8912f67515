# -*- coding=utf-8 -*-
from unittest.mock import Mock

from nsimplex.observer import BenchmarkCellError, BenchmarkCellStart, notify


def test__notify():
    observer = Mock()
    message = BenchmarkCellStart("nseq", 4, 0.1)

    assert notify(observer, message) == observer.return_value

    observer.assert_called_once_with(message)


def test__notify_none():
    assert notify(None, BenchmarkCellStart("scan", 0, 0.1)) is None


def test__notify_swallows_observer_exceptions():
    observer = Mock(side_effect=RuntimeError("observer failed"))

    assert notify(observer, BenchmarkCellError("tree", 0, 0.1, ValueError("boom"))) is None

    observer.assert_called_once()


def test__message_repr():
    assert repr(BenchmarkCellStart("nseq", 4, 0.1)) == "<BenchmarkCellStart nseq dims=4 threshold=0.1>"
