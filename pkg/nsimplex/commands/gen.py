# -*- coding=utf-8 -*-
import logging

from nsimplex.dataset.generate import GeneratorKind, generate
from nsimplex.dataset.load import write_dataset

from .utils import exit_on_error

logger = logging.getLogger(__name__)

__all__ = ["gen"]


def gen(args):
    with exit_on_error():
        dataset = generate(GeneratorKind(args.kind), args.count, args.dims, args.seed)
        write_dataset(args.out, dataset.values)

    logger.info("Wrote %d %s vectors of dimension %d to %s", dataset.count, args.kind, dataset.dimension, args.out)
