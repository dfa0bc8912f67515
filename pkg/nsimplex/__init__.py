# -*- coding=utf-8 -*-
import logging

logger = logging.getLogger(__name__)
