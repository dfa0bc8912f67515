# -*- coding=utf-8 -*-
import logging

logger = logging.getLogger(__name__)

__all__ = ["SimplexError", "InvalidDistanceMatrixError", "NonEmbeddableError", "DegeneratePivotsError",
           "BaseMismatchError"]


class SimplexError(ValueError):
    pass


class InvalidDistanceMatrixError(SimplexError):
    pass


class NonEmbeddableError(SimplexError):
    def __init__(self, radicand, index=None, pivot_index=None):
        self.radicand = radicand
        # Row of the batch being placed (object index for tables)
        self.index = index
        # Set when the failure happened while building the base itself
        self.pivot_index = pivot_index

    def __str__(self):
        where = ""
        if self.pivot_index is not None:
            where = f" while adding pivot {self.pivot_index}"
        elif self.index is not None:
            where = f" for object {self.index}"
        return (f"Distances can't be embedded{where}: radicand {self.radicand!r} is negative "
                "(distances violate the n-point property)")


class DegeneratePivotsError(SimplexError):
    def __init__(self, pivot_index, altitude):
        self.pivot_index = pivot_index
        self.altitude = altitude

    def __str__(self):
        return (f"Pivot {self.pivot_index} is affinely dependent on its predecessors "
                f"(altitude {self.altitude!r})")


class BaseMismatchError(SimplexError):
    def __str__(self):
        return "Apexes were built over different simplex bases"
