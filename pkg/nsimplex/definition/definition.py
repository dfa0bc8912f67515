# -*- coding=utf-8 -*-
from collections import namedtuple
import copy
import logging

from nsimplex.dataset.generate import GeneratorKind
from nsimplex.dataset.split import DEFAULT_QUERY_FRACTION
from nsimplex.evaluation.distortion import DEFAULT_PAIRS
from nsimplex.evaluation.mapping import Mapping
from nsimplex.htree.tree import DEFAULT_LEAF_CAPACITY
from nsimplex.metric.kind import MetricKind
from nsimplex.metric.spec import get_metric
from nsimplex.pivots.pivot_set import PivotStrategy
from nsimplex.table.search import Mechanism

from .schema import benchmark_validator, distortion_validator

logger = logging.getLogger(__name__)

__all__ = ["DefinitionErrors", "DefinitionError", "DataSource", "GeneratedData", "BenchmarkDefinition",
           "DistortionDefinition"]


class DefinitionErrors(ValueError):
    def __init__(self, errors):
        self.errors = errors

    def __str__(self):
        return "\n".join([str(e) for e in self.errors])


class DefinitionError(ValueError):
    def __init__(self, key, error):
        self.key = key
        self.error = error

    def __str__(self):
        return f"Invalid {self.key!r}: {self.error!s}"


GeneratedData = namedtuple("GeneratedData", ["kind", "count", "dims", "seed"])


class DataSource:
    """
    Either a dataset file path or generator parameters.
    """

    def __init__(self, path=None, generated: GeneratedData = None):
        self.path = path
        self.generated = generated

    def __repr__(self):
        return f"<DataSource {self.path or self.generated!r}>"

    @classmethod
    def from_data(cls, data):
        if "generate" in data:
            generate = data["generate"]
            generate.setdefault("seed", 0)
            generate.setdefault("kind", GeneratorKind.UNIFORM.value)
            return cls(generated=GeneratedData(GeneratorKind(generate["kind"]), generate["count"], generate["dims"],
                                               generate["seed"]))

        return cls(path=data["dataset"])


class BenchmarkDefinition:
    def __init__(self, source: DataSource, metric, thresholds, target_fraction, dims, mechanisms, pivot_strategy,
                 seeds, query_fraction, max_queries, leaf_capacity, workers):
        self.source = source
        self.metric = metric
        self.thresholds = thresholds
        self.target_fraction = target_fraction
        self.dims = dims
        self.mechanisms = mechanisms
        self.pivot_strategy = pivot_strategy
        self.seeds = seeds
        self.query_fraction = query_fraction
        self.max_queries = max_queries
        self.leaf_capacity = leaf_capacity
        self.workers = workers

    @classmethod
    def validate(cls, data):
        benchmark_validator.validate(data)

    @classmethod
    def from_data(cls, data):
        data = copy.deepcopy(data)

        cls.validate(data)

        data.setdefault("thresholds", None)
        data.setdefault("target-fraction", None)
        data.setdefault("pivots", PivotStrategy.RANDOM.value)
        data.setdefault("seeds", [0])
        data.setdefault("query-fraction", DEFAULT_QUERY_FRACTION)
        data.setdefault("max-queries", None)
        data.setdefault("leaf-capacity", DEFAULT_LEAF_CAPACITY)
        data.setdefault("workers", 1)

        errors = []

        metric = get_metric(data["metric"])
        pivot_strategy = PivotStrategy(data["pivots"])
        mechanisms = [Mechanism(mechanism) for mechanism in data["mechanisms"]]

        if data["thresholds"] is not None and data["target-fraction"] is not None:
            errors.append(DefinitionError("target-fraction", "can't be combined with explicit thresholds"))

        if (
            pivot_strategy == PivotStrategy.PCA and
            metric.kind != MetricKind.EUCLIDEAN and
            any(mechanism.needs_pivots for mechanism in mechanisms)
        ):
            errors.append(DefinitionError("pivots", f"PCA pivots require euclidean metric, not {metric.name}"))

        if errors:
            raise DefinitionErrors(errors)

        return cls(DataSource.from_data(data), metric, data["thresholds"], data["target-fraction"], data["dims"],
                   mechanisms, pivot_strategy, data["seeds"], data["query-fraction"], data["max-queries"],
                   data["leaf-capacity"], data["workers"])


class DistortionDefinition:
    def __init__(self, source: DataSource, metric, mappings, dims, pairs, seed, workers):
        self.source = source
        self.metric = metric
        self.mappings = mappings
        self.dims = dims
        self.pairs = pairs
        self.seed = seed
        self.workers = workers

    @classmethod
    def validate(cls, data):
        distortion_validator.validate(data)

    @classmethod
    def from_data(cls, data):
        data = copy.deepcopy(data)

        cls.validate(data)

        data.setdefault("pairs", DEFAULT_PAIRS)
        data.setdefault("seed", 0)
        data.setdefault("workers", 1)

        metric = get_metric(data["metric"])
        mappings = [Mapping(mapping) for mapping in data["mappings"]]

        errors = []
        for mapping in mappings:
            if mapping.euclidean_only and metric.kind != MetricKind.EUCLIDEAN:
                errors.append(DefinitionError("mappings", f"{mapping.value} requires euclidean metric"))

        if errors:
            raise DefinitionErrors(errors)

        return cls(DataSource.from_data(data), metric, mappings, data["dims"], data["pairs"], data["seed"],
                   data["workers"])
