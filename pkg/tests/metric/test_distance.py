# -*- coding=utf-8 -*-
import math

import numpy as np
import pytest

from nsimplex.metric.spec import evaluate, get_metric
from nsimplex.utils.test import SUPERMETRICS, make_data


@pytest.mark.parametrize("metric,x,y,distance", [
    ("euclidean", [0, 0], [3, 4], 5.0),
    ("chebyshev", [1, 5], [4, 3], 3.0),
    ("cosine", [1, 0], [0, 1], math.sqrt(2)),
    ("cosine", [2, 0], [5, 0], 0.0),
    ("jensen-shannon", [1, 0], [0, 1], 1.0),
    ("jensen-shannon", [0.2, 0.8], [0.2, 0.8], 0.0),
    ("triangular", [1, 0], [0, 1], math.sqrt(2)),
    ("triangular", [1, 3], [3, 1], math.sqrt(0.5)),
])
def test__evaluate(metric, x, y, distance):
    assert evaluate(get_metric(metric), x, y) == pytest.approx(distance, abs=1e-12)


@pytest.mark.parametrize("metric", SUPERMETRICS + ["chebyshev"])
def test__symmetric_exactly(metric):
    data = make_data("euclidean" if metric == "chebyshev" else metric, 2000, 8, seed=1)
    spec = get_metric(metric)
    x, y = data[:1000], data[1000:]

    assert np.array_equal(spec.kernel(x, y), spec.kernel(y, x))


@pytest.mark.parametrize("metric", SUPERMETRICS + ["chebyshev"])
def test__identity(metric):
    data = make_data("euclidean" if metric == "chebyshev" else metric, 100, 8, seed=2)
    spec = get_metric(metric)

    assert np.all(spec.kernel(data, data) <= 1e-12)


@pytest.mark.parametrize("metric", SUPERMETRICS + ["chebyshev"])
def test__triangle_inequality(metric):
    data = make_data("euclidean" if metric == "chebyshev" else metric, 3000, 6, seed=3)
    spec = get_metric(metric)
    x, y, z = data[:1000], data[1000:2000], data[2000:]

    assert np.all(spec.kernel(x, z) <= spec.kernel(x, y) + spec.kernel(y, z) + 1e-9)


def test__jensen_shannon_bounded():
    data = make_data("jensen-shannon", 2000, 10, seed=4)
    distances = get_metric("jensen-shannon").kernel(data[:1000], data[1000:])

    assert np.all(distances >= 0)
    assert np.all(distances <= 1)


def test__kernel_reduces_over_last_axis():
    spec = get_metric("euclidean")
    x = np.array([0.0, 0.0])
    ys = np.array([[3.0, 4.0], [6.0, 8.0]])

    assert spec.distances(x, ys).tolist() == [5.0, 10.0]
    assert spec.distance(x, ys[1]) == 10.0
