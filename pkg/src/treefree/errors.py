"""Exception types shared across the toolkit."""

from __future__ import annotations


class TreefreeError(Exception):
    """Base class for every error raised by this package."""


class ConstructionError(TreefreeError):
    """A graph or pattern cannot be built from the given arguments."""


class MissingEdgeError(TreefreeError):
    """An operation required an edge that is not present."""


class DisconnectedError(TreefreeError):
    """An operation defined only for connected graphs got a disconnected one."""


class CapacityError(TreefreeError):
    """Input exceeds a documented size cap."""


class FormatError(TreefreeError):
    """Malformed graph6 data.

    ``offset`` is the byte position inside the record, ``record`` the
    1-based record number inside a corpus (when applicable).
    """

    def __init__(self, message: str, offset: int | None = None, record: int | None = None):
        self.message = message
        self.offset = offset
        self.record = record
        parts = [message]
        if offset is not None:
            parts.append(f"at byte {offset}")
        if record is not None:
            parts.append(f"in record {record}")
        super().__init__(" ".join(parts))


class NotATreeError(TreefreeError):
    """A tree-only predicate was applied to a non-tree."""


class AdjacentEndpointsError(TreefreeError):
    """Path-set computations need non-adjacent endpoints."""


class InvalidWitnessError(TreefreeError):
    """A supplied witness (path, embedding, ...) fails its own definition."""


class DomainError(TreefreeError):
    """An argument lies outside the domain of the requested computation."""


class UnsupportedRamseyError(TreefreeError):
    """The requested Ramsey number is outside the built-in table."""


class UsageError(TreefreeError):
    """Bad command-line arguments or unknown check id."""
