# -*- coding=utf-8 -*-
import logging

logger = logging.getLogger(__name__)

__all__ = ["PivotSelectionError"]


class PivotSelectionError(ValueError):
    pass
