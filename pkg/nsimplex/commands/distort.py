# -*- coding=utf-8 -*-
import logging

from nsimplex.definition.definition import DistortionDefinition
from nsimplex.evaluation.mapping import compare_mappings

from .utils import definition_from_flags, exit_on_error, load_source, log_observer, write_csv

logger = logging.getLogger(__name__)

__all__ = ["distort"]

FLAGS = {
    "metric": "metric",
    "mappings": "mapping",
    "dims": "dims",
    "pairs": "pairs",
    "seed": "seed",
    "workers": "workers",
}

COLUMNS = ["mapping", "dims", "r", "D", "pairs_sampled", "zero_pairs_skipped"]


def distort(args):
    with exit_on_error():
        definition = definition_from_flags(args, FLAGS, DistortionDefinition)

        data = load_source(definition.source, definition.metric)
        reports = compare_mappings(data, definition.metric, definition.mappings, definition.dims, definition.pairs,
                                   definition.seed, definition.workers, log_observer)

        write_csv([
            (report.mapping_name, report.dims, report.r, report.D, report.pairs_sampled, report.zero_pairs_skipped)
            for report in reports
        ], COLUMNS, args.out)
