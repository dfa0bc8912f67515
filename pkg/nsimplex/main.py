# -*- coding=utf-8 -*-
import argparse
import logging
import sys

import coloredlogs

from .commands.bench import bench
from .commands.build import build
from .commands.distort import distort
from .commands.gen import gen
from .commands.pivots import pivots
from .commands.query import query
from .commands.utils import EXIT_USAGE
from .dataset.generate import GeneratorKind
from .dataset.split import DEFAULT_QUERY_FRACTION
from .evaluation.mapping import Mapping
from .htree.tree import DEFAULT_LEAF_CAPACITY
from .pivots.pivot_set import PivotStrategy
from .store.table import TableKind
from .table.search import Mechanism
from .utils.logging import LongArgumentsFilter

logger = logging.getLogger(__name__)

METRICS = ["euclidean", "cosine", "jensen-shannon", "triangular"]


class LoggingConfiguration:
    def __init__(self, value):
        self.default_level = logging.INFO
        self.loggers = []

        for v in value.split(","):
            if ":" in v:
                logger_name, level_name = v.split(":", 1)
                try:
                    level = logging._nameToLevel[level_name.upper()]
                except KeyError:
                    raise argparse.ArgumentTypeError(f"Unknown logging level: {level_name!r}") from None

                self.loggers.append((logger_name, level))
            else:
                level_name = v
                try:
                    level = logging._nameToLevel[level_name.upper()]
                except KeyError:
                    raise argparse.ArgumentTypeError(f"Unknown logging level: {level_name!r}") from None

                self.default_level = level


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def non_negative_float(value):
    try:
        value = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"Invalid number: {value!r}") from None

    if not value >= 0:
        raise argparse.ArgumentTypeError(f"Must be non-negative: {value!r}")

    return value


def positive_int(value):
    try:
        value = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"Invalid integer: {value!r}") from None

    if value < 1:
        raise argparse.ArgumentTypeError(f"Must be positive: {value!r}")

    return value


def add_data_arguments(parser):
    parser.add_argument("dataset", help="ASCII vector file, or binary vectors (.vecs/.fvecs)")
    parser.add_argument("--metric", choices=METRICS, default="euclidean")
    parser.add_argument("--query-fraction", type=float, default=DEFAULT_QUERY_FRACTION,
                        help="Leading fraction of the file used as queries and excluded from the data")


def add_pivot_arguments(parser, dims_required=False):
    parser.add_argument("--dims", type=positive_int, required=dims_required, help="Number of pivots")
    parser.add_argument("--pivots", choices=[strategy.value for strategy in PivotStrategy],
                        default=PivotStrategy.RANDOM.value)
    parser.add_argument("--seed", type=int, default=0)


def main(argv=None):
    parser = ArgumentParser(prog="nsimplex")

    parser.add_argument("-l", "--logging", type=LoggingConfiguration, default="info",
                        help='Per-logger logging level configuration. E.g.: "info", "warning" or '
                             '"debug,nsimplex.htree:info"')

    subparsers = parser.add_subparsers()
    subparsers.required = True
    subparsers.dest = "command"

    gen_parser = subparsers.add_parser("gen", help="Generate synthetic data")
    gen_parser.add_argument("--kind", choices=[kind.value for kind in GeneratorKind],
                            default=GeneratorKind.UNIFORM.value)
    gen_parser.add_argument("--count", type=positive_int, required=True)
    gen_parser.add_argument("--dims", type=positive_int, required=True)
    gen_parser.add_argument("--seed", type=int, default=0)
    gen_parser.add_argument("--out", required=True)
    gen_parser.set_defaults(func=gen)

    pivots_parser = subparsers.add_parser("pivots", help="Select pivots and save them")
    add_data_arguments(pivots_parser)
    add_pivot_arguments(pivots_parser, dims_required=True)
    pivots_parser.add_argument("--out", required=True)
    pivots_parser.set_defaults(func=pivots)

    build_parser = subparsers.add_parser("build", help="Build a LAESA table, an apex table or a tree and save it")
    add_data_arguments(build_parser)
    add_pivot_arguments(build_parser)
    build_parser.add_argument("--kind", choices=[kind.value for kind in TableKind], required=True)
    build_parser.add_argument("--pivot-file", help="Pivots saved by the pivots command")
    build_parser.add_argument("--leaf-capacity", type=positive_int, default=DEFAULT_LEAF_CAPACITY)
    build_parser.add_argument("--out", required=True, help="Table sidecar path")
    build_parser.set_defaults(func=build)

    query_parser = subparsers.add_parser("query", help="Run one range query and print result ids and stats")
    add_data_arguments(query_parser)
    add_pivot_arguments(query_parser)
    query_parser.add_argument("--mechanism", choices=[mechanism.value for mechanism in Mechanism], required=True)
    query_parser.add_argument("--threshold", type=non_negative_float, required=True)
    query_parser.add_argument("--query-index", type=int,
                              help="Row of the dataset file to query with (default: first row after the queries)")
    query_parser.add_argument("--pivot-file", help="Pivots saved by the pivots command")
    query_parser.add_argument("--table", help="Table sidecar saved by the build command")
    query_parser.add_argument("--leaf-capacity", type=positive_int, default=DEFAULT_LEAF_CAPACITY)
    query_parser.set_defaults(func=query)

    bench_parser = subparsers.add_parser("bench", help="Run the benchmark grid and write CSV")
    bench_parser.add_argument("dataset", nargs="?")
    bench_parser.add_argument("--definition", help="YAML benchmark definition, replaces all other options")
    bench_parser.add_argument("--metric", choices=METRICS)
    bench_parser.add_argument("--threshold", type=non_negative_float, nargs="+")
    bench_parser.add_argument("--target-fraction", type=float,
                              help="Calibrate the threshold to return about this fraction of the data")
    bench_parser.add_argument("--dims", type=positive_int, nargs="+")
    bench_parser.add_argument("--mechanism", choices=[mechanism.value for mechanism in Mechanism], nargs="+")
    bench_parser.add_argument("--pivots", choices=[strategy.value for strategy in PivotStrategy])
    bench_parser.add_argument("--seed", type=int, nargs="+")
    bench_parser.add_argument("--query-fraction", type=float)
    bench_parser.add_argument("--max-queries", type=positive_int)
    bench_parser.add_argument("--leaf-capacity", type=positive_int)
    bench_parser.add_argument("--workers", type=positive_int)
    bench_parser.add_argument("--out", help="CSV path, standard output if omitted")
    bench_parser.set_defaults(func=bench)

    distort_parser = subparsers.add_parser("distort", help="Compare dimensionality reductions and write CSV")
    distort_parser.add_argument("dataset", nargs="?")
    distort_parser.add_argument("--definition", help="YAML distortion definition, replaces all other options")
    distort_parser.add_argument("--metric", choices=METRICS)
    distort_parser.add_argument("--mapping", choices=[mapping.value for mapping in Mapping], nargs="+")
    distort_parser.add_argument("--dims", type=positive_int, nargs="+")
    distort_parser.add_argument("--pairs", type=positive_int)
    distort_parser.add_argument("--seed", type=int)
    distort_parser.add_argument("--workers", type=positive_int)
    distort_parser.add_argument("--out", help="CSV path, standard output if omitted")
    distort_parser.set_defaults(func=distort)

    args = parser.parse_args(argv)

    logging_format = "[%(asctime)s] %(levelname)-8s [%(threadName)s] [%(name)s] %(message)s"
    logging.basicConfig(level=args.logging.default_level, format=logging_format)
    if sys.stderr.isatty():
        coloredlogs.install(level=args.logging.default_level, fmt=logging_format)
    for name, level in args.logging.loggers:
        logging.getLogger(name).setLevel(level)
    for handler in logging.getLogger().handlers:
        handler.addFilter(LongArgumentsFilter())

    args.func(args)
