"""Exception hierarchy shared across the package."""

from __future__ import annotations


class StrataError(Exception):
    """Base class for every error raised by dmstrata."""


class UnstableTypeError(StrataError, ValueError):
    """The ambient type (g, n) has 2g - 2 + n <= 0."""

    def __init__(self, genus: int, legs: int):
        self.genus = genus
        self.legs = legs
        super().__init__(
            f"type (g={genus}, n={legs}) is not stable: 2g-2+n = {2 * genus - 2 + legs} <= 0"
        )


class GuardRailError(StrataError, ValueError):
    """Refused to enumerate a type whose boundary depth exceeds the desk-scale limit."""


class DisconnectedGraphError(StrataError, ValueError):
    pass


class EdgeNotFoundError(StrataError, KeyError):
    pass


class StabilityError(StrataError, ValueError):
    """A move produced a graph with an unstable vertex."""

    def __init__(self, message: str, violations=()):
        self.violations = list(violations)
        super().__init__(message)


class DegenerationError(StrataError, ValueError):
    """A degeneration move is not applicable at the requested vertex."""


class IdentificationError(StrataError, KeyError):
    """An edge of a contracted graph has no preimage under the survival map."""


class UnknownStratumError(StrataError, KeyError):
    pass


class SNFOverflowError(StrataError, OverflowError):
    """An entry left the configured fixed-width range during elimination."""
