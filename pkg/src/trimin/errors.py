"""Exception hierarchy.

Everything raised on bad domain input derives from :class:`TriminError`, so the
command line can map it to exit code 1 without swallowing programming errors.
"""

from __future__ import annotations


class TriminError(ValueError):
    """Base class for domain errors."""


class GraphError(TriminError):
    """Malformed graph input (bad vertex, loop, duplicate edge, size mismatch)."""


class UnsupportedSizeError(TriminError):
    """The requested order is above a hard exactness bound."""


class Graph6Error(TriminError):
    """graph6 parse failure; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class KMismatchError(TriminError):
    """k(2e/n^2) may differ from k(n, e), so an exact c comparison is unsafe."""


class HypothesisError(TriminError):
    """A hypothesis of the k-partite comparison bound does not hold."""

    def __init__(self, clause: str, detail: str):
        super().__init__(f"hypothesis {clause} fails: {detail}")
        self.clause = clause


class PartitionError(TriminError):
    """A supplied vertex partition is not a valid witness."""
