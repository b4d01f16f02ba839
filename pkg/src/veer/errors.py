"""Exception types shared across the package.

The distinction that matters downstream: ParseError and BoundaryClass flag bad
*input*, while InternalInconsistency (and its subclasses) flags a broken
internal invariant, i.e. a bug in a convention or an engine, never the user's
word.  The CLI maps the first group to exit code 1 and the second to 2.
"""

from __future__ import annotations


class VeerError(Exception):
    """Base class for everything raised deliberately by this package."""


class ParseError(VeerError):
    """Malformed braid-word text.  Carries the byte offset of the offender."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class BoundaryClass(VeerError):
    """An operation was asked about a loop in the boundary-parallel class
    (a power of y3 y2 y1), where twisting acts trivially."""


class InternalInconsistency(VeerError):
    """Two routes that must agree did not, or a structural invariant failed.

    Signals a convention bug in this package, not bad input.
    """


class TriangleViolation(InternalInconsistency):
    """An intersection-table row where no entry equals the sum of the other two."""


class ReconstructionMismatch(InternalInconsistency):
    """The reconstructed loop failed the exact matrix round-trip check."""
