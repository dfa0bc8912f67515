# -*- coding=utf-8 -*-
import glob
import logging
import os

import jsonschema
import jsonschema.validators
import yaml

logger = logging.getLogger(__name__)

__all__ = ["benchmark_validator", "distortion_validator", "pivots_validator", "table_validator"]

SCHEMA_DIR = os.path.dirname(__file__)


def load_schemas():
    """
    Every `*.schema.yaml` next to this module, keyed by its `$id`. `$ref`s between them resolve from here and
    never hit the network.
    """
    schemas = {}
    for path in sorted(glob.glob(os.path.join(SCHEMA_DIR, "*.schema.yaml"))):
        with open(path) as f:
            schema = yaml.safe_load(f)

        schemas[schema["$id"]] = schema

    return schemas


SCHEMAS = load_schemas()


def create_validator(name):
    schema = SCHEMAS[f"http://nsimplex/schema/{name}.schema.json"]

    validator_cls = jsonschema.validators.validator_for(schema)
    validator_cls.check_schema(schema)
    resolver = jsonschema.RefResolver.from_schema(schema, store=SCHEMAS)
    return validator_cls(schema, resolver=resolver)


benchmark_validator = create_validator("benchmark")
distortion_validator = create_validator("distortion")
pivots_validator = create_validator("pivots")
table_validator = create_validator("table")
