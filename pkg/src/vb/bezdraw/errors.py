"""Provide the exception hierarchy of the package."""

from __future__ import annotations


class BezdrawError(Exception):
    """Base class of all errors raised by the package."""


class InputError(BezdrawError, ValueError):
    """Invalid user supplied data."""


class EmbeddingError(InputError):
    """Violated invariant of a 1-plane combinatorial embedding."""


class JointBoxError(InputError):
    """Violated invariant of a joint-box drawing."""


class FormatError(InputError):
    """JSON document not matching the expected schema."""


class GeometryError(BezdrawError, ValueError):
    """Domain error of a geometric primitive."""


class ConstructionError(BezdrawError, RuntimeError):
    """A construction step failed a condition guaranteed by theory.

    Seeing this error means either the input is outside the hypothesis
    of the construction or there is a bug.
    """
