"""Exception hierarchy shared by every engine."""


class MVLogicError(Exception):
    """Base class for all errors raised by mvlogic."""


class MatrixError(MVLogicError):
    """A matrix, connective or algebra violates its structural invariants."""


class FormulaSyntaxError(MVLogicError):
    """Raised by the formula parser; ``position`` is a 0-based column."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class EvaluationError(MVLogicError):
    """A valuation or structure does not cover the symbols being evaluated."""


class ResourceLimitExceeded(MVLogicError):
    """A configurable search bound was hit before a verdict was reached.

    This is never a verdict: callers must treat it as "unknown".
    """


class VerificationError(MVLogicError):
    """An internally generated object failed its exhaustive self-check."""
