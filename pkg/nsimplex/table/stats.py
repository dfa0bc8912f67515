# -*- coding=utf-8 -*-
import logging

logger = logging.getLogger(__name__)

__all__ = ["QueryStats"]


class QueryStats:
    """
    Work done by one query. Each query owns its instance; aggregates are summed after queries complete.
    """

    fields = ["original_calls", "surrogate_calls", "candidates", "confirmed_without_recheck", "rechecked",
              "results", "nodes_visited"]

    def __init__(self, original_calls=0, surrogate_calls=0, candidates=0, confirmed_without_recheck=0,
                 rechecked=0, results=0, nodes_visited=0):
        self.original_calls = original_calls
        self.surrogate_calls = surrogate_calls
        self.candidates = candidates
        self.confirmed_without_recheck = confirmed_without_recheck
        self.rechecked = rechecked
        self.results = results
        self.nodes_visited = nodes_visited

    def __repr__(self):
        return "<QueryStats " + " ".join([f"{field}={getattr(self, field)}" for field in self.fields]) + ">"

    def __eq__(self, other):
        return isinstance(other, QueryStats) and self.as_dict() == other.as_dict()

    def __add__(self, other):
        return QueryStats(**{field: getattr(self, field) + getattr(other, field) for field in self.fields})

    def as_dict(self):
        return {field: getattr(self, field) for field in self.fields}
