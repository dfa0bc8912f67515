# -*- coding=utf-8 -*-
import contextlib
import jsonschema.exceptions
import logging
import sys

import numpy as np
import pandas as pd
import yaml

from nsimplex.dataset.generate import generate
from nsimplex.dataset.load import load_dataset
from nsimplex.definition.definition import DataSource
from nsimplex.metric.spec import MetricSpec
from nsimplex.metric.validate import validate_dataset
from nsimplex.table.error import ExactnessViolationError, MechanismNotBuiltError

logger = logging.getLogger(__name__)

__all__ = ["EXIT_USAGE", "EXIT_DATA", "EXIT_INVARIANT", "UsageError", "exit_on_error", "load_definition",
           "definition_from_flags", "load_source", "log_observer", "write_csv"]

EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INVARIANT = 3


class UsageError(Exception):
    pass


@contextlib.contextmanager
def exit_on_error():
    """
    Turns library exceptions into a one-line diagnostic on standard error and the matching exit code.
    """
    try:
        yield
    except UsageError as e:
        sys.stderr.write(f"{e!s}\n")
        sys.exit(EXIT_USAGE)
    except (ExactnessViolationError, MechanismNotBuiltError) as e:
        sys.stderr.write(f"Internal error: {e!s}\n")
        sys.exit(EXIT_INVARIANT)
    except jsonschema.exceptions.ValidationError as e:
        sys.stderr.write(f"Definition validation error: {e.message}\n")
        sys.exit(EXIT_DATA)
    except yaml.YAMLError as e:
        sys.stderr.write(f"Definition syntax error: {e!s}\n")
        sys.exit(EXIT_DATA)
    except ValueError as e:
        sys.stderr.write(" ".join(f"{e!s}".splitlines()) + "\n")
        sys.exit(EXIT_DATA)


def load_definition(path, cls):
    try:
        with open(path) as f:
            data = yaml.safe_load(f)
    except OSError as e:
        raise UsageError(f"Unable to read definition {path}: {e!s}") from None

    return cls.from_data(data)


def definition_from_flags(args, flags, cls):
    """
    Builds a definition from command-line flags: `flags` maps definition keys to argument names. Flags must not
    be combined with `--definition`.
    """
    given = {key: getattr(args, name) for key, name in flags.items() if getattr(args, name) is not None}

    if args.definition is not None:
        if given or args.dataset is not None:
            raise UsageError("--definition can't be combined with other options: " +
                             ", ".join(sorted(given) + (["dataset"] if args.dataset is not None else [])))

        return load_definition(args.definition, cls)

    if args.dataset is None:
        raise UsageError("Either a dataset or --definition is required")

    try:
        return cls.from_data({"dataset": args.dataset, **given})
    except jsonschema.exceptions.ValidationError as e:
        raise UsageError(f"Invalid options: {e.message}") from None


def log_observer(message):
    logger.info("%r", message)


def load_source(source: DataSource, metric: MetricSpec) -> np.ndarray:
    if source.generated is not None:
        generated = source.generated
        values = generate(generated.kind, generated.count, generated.dims, generated.seed).values
    else:
        values = load_dataset(source.path).values

    validate_dataset(metric, values).raise_for_failures()
    return metric.prepare(values)


def write_csv(rows, columns, out):
    """
    17 significant digits so floats parse back exactly.
    """
    pd.DataFrame(rows, columns=columns).to_csv(out if out is not None else sys.stdout, index=False,
                                              float_format="%.17g")
