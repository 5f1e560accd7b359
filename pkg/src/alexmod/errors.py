"""Exception hierarchy shared across the package."""


class AlexmodError(Exception):
    """Base class for all package errors."""


class RingMismatchError(AlexmodError):
    """Operands live over different coefficient rings."""


class ExactDivisionError(AlexmodError):
    """A division that was required to be exact is not."""


class ParseError(AlexmodError):
    """Malformed textual input."""


class ValidationError(AlexmodError):
    """Structurally invalid diagram, presentation or module data."""


class NotCokernelFreeError(AlexmodError):
    """Operation requires a cokernel-free module."""


class NotFiniteError(AlexmodError):
    """Operation requires a finite module and finiteness failed to certify."""


class FinitenessCertificationError(AlexmodError):
    """A module that is finite by theory failed certification: internal bug."""


class BoundExceededError(AlexmodError):
    """A configured search or degree bound was exceeded."""


class PartitionInfeasibleError(AlexmodError):
    """Requested genus partition cannot be realized by the given matrix."""

    def __init__(self, message, minimal_genus=None):
        super().__init__(message)
        self.minimal_genus = minimal_genus


class RoundTripMismatchError(AlexmodError):
    """A construction failed its own round-trip verification: internal bug."""
