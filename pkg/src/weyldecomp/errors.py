"""Exception hierarchy for weyldecomp.

Every error raised by the library derives from :class:`WeylError`, so callers
(including the CLI) can catch one base class and map failures to diagnostics.
"""
from __future__ import annotations


class WeylError(Exception):
    """Base class for all weyldecomp errors."""


class InvalidType(WeylError):
    """Raised for an inadmissible (family, rank) combination, e.g. E5 or G3."""


class DimensionMismatch(WeylError):
    """Raised when vector or matrix dimensions do not match the expected rank."""


class NotARoot(WeylError):
    """Raised when a coefficient vector is required to be a root but is not."""


class DisconnectedSubset(WeylError):
    """Raised for an index set that is empty, out of range, or disconnected
    in the Dynkin diagram where a connected subset is required."""


class UnrecognizedDiagram(WeylError):
    """Raised when an induced subdiagram matches no admissible system type."""


class BadLetter(WeylError):
    """Raised when a word contains a letter outside 1..rank."""


class BadRange(WeylError):
    """Raised when index arguments (k, n) fall outside their allowed range."""


class Orthogonal(WeylError):
    """Raised when two roots are orthogonal but a conjugation rule needs a
    non-orthogonal pair."""


class Proportional(WeylError):
    """Raised when two roots are proportional but a conjugation rule needs a
    non-proportional pair."""


class TooLarge(WeylError):
    """Raised when a search or enumeration would exceed its size guard."""


class NoRelation(WeylError):
    """Raised when no cross-type recursion relation is defined for a system."""


class WrongFamily(WeylError):
    """Raised when an operation is applied to a family it is not defined for."""
