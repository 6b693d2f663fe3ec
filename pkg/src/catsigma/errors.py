"""Exception types shared across the package."""


class CapacityError(Exception):
    """A request exceeds a documented resource ceiling (memory, exponent
    range, or exact-arithmetic size)."""


class InconsistencyError(Exception):
    """An internal exactness check failed, e.g. a division that must be
    exact left a remainder.  Indicates a transcription bug, not bad input."""


class InconclusiveError(Exception):
    """A bounded search finished without producing the witness that the
    closed-form analysis says must exist."""
