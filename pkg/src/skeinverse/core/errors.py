"""skeinverse.core.errors
======================
Every exception the engine raises on purpose lives here, so callers (the CLI
above all) can map a whole family to one exit code with a single `except`.

Layering: this file imports nothing from the package.
"""

from __future__ import annotations

__all__ = [
    "SkeinverseError",
    "DiagramError",
    "EmptyDiagramError",
    "MalformedTokenError",
    "ArcMultiplicityError",
    "InconsistentNumberingError",
    "InvalidCrossingError",
    "MoveError",
    "RingError",
    "PresentationMismatchError",
    "MissingImageError",
    "HomomorphismError",
    "CapExceededError",
]


class SkeinverseError(Exception):
    """Root of the package's exception tree."""


# --------------------------------------------------------------------- #
# Diagrams
# --------------------------------------------------------------------- #
class DiagramError(SkeinverseError, ValueError):
    """A diagram (or its text form) violates the diagram invariants."""


class EmptyDiagramError(DiagramError):
    """Input held no tokens at all, or described zero components."""


class MalformedTokenError(DiagramError):
    """A token that is not `C(..)`, `X(..)`, `B(..)` or `O n`."""


class ArcMultiplicityError(DiagramError):
    """Some arc label does not occur exactly twice."""


class InconsistentNumberingError(DiagramError):
    """Arc labels are not consecutive along a component."""


class InvalidCrossingError(DiagramError, IndexError):
    """Crossing index out of range."""


class MoveError(DiagramError):
    """A Reidemeister move whose local pattern is absent at the given site."""


# --------------------------------------------------------------------- #
# Rings
# --------------------------------------------------------------------- #
class RingError(SkeinverseError, ValueError):
    """Illegal ring arithmetic."""


class PresentationMismatchError(RingError):
    """Operands belong to different presentations."""


class MissingImageError(RingError):
    """A homomorphism lacks the image of a generator it was asked for."""


class HomomorphismError(SkeinverseError):
    """A homomorphism failed the relation check it was required to pass."""


# --------------------------------------------------------------------- #
# Resource caps
# --------------------------------------------------------------------- #
class CapExceededError(SkeinverseError):
    """Diagram too large for the configured crossing cap."""

    def __init__(self, crossings: int, cap: int, what: str = "computation") -> None:
        super().__init__(f"{what} refused: {crossings} crossings exceeds cap {cap}")
        self.crossings = crossings
        self.cap = cap
