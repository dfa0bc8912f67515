# -*- coding=utf-8 -*-
import jsonschema.exceptions
import logging

import yaml

from .error import StoreError

logger = logging.getLogger(__name__)

__all__ = ["read_sidecar", "write_sidecar"]


def read_sidecar(path, validator):
    try:
        with open(path) as f:
            sidecar = yaml.safe_load(f)
    except OSError as e:
        raise StoreError(path, f"unable to read: {e!s}") from None
    except yaml.YAMLError as e:
        raise StoreError(path, f"syntax error: {e!s}") from None

    try:
        validator.validate(sidecar)
    except jsonschema.exceptions.ValidationError as e:
        raise StoreError(path, f"invalid sidecar: {e.message}") from None

    return sidecar


def write_sidecar(path, sidecar):
    with open(path, "w") as f:
        yaml.safe_dump(sidecar, f, default_flow_style=None, sort_keys=False)
