"""Exception types shared across the package."""


class FincatError(Exception):
    """Base class for every error raised by this package."""


class StructuralError(FincatError):
    """A structure references undeclared names or is otherwise malformed."""


class NonComposableError(FincatError):
    """Composition requested for a pair whose middle objects disagree."""


class DimensionError(FincatError):
    """Matrix dimensions do not fit the requested operation."""


class SingularMatrixError(FincatError):
    """An inverse was requested for a matrix that has none."""


class ClosureError(FincatError):
    """A generated morphism set is not closed under composition."""


class EvaluatorError(FincatError):
    """A user-supplied evaluator failed; carries the offending input."""

    def __init__(self, message, state=None, time=None):
        super().__init__(message)
        self.state = state
        self.time = time


class LimitExceededError(FincatError):
    """An exhaustive search would exceed the configured size bound."""

    def __init__(self, message, bound=None, limit=None):
        super().__init__(message)
        self.bound = bound
        self.limit = limit


class ParseError(FincatError):
    """Source text was rejected. ``line`` and ``col`` are 1-based when known."""

    def __init__(self, message, line=None, col=None):
        super().__init__(message)
        self.line = line
        self.col = col

    def __str__(self):
        msg = super().__str__()
        if self.line is not None:
            pos = f"line {self.line}"
            if self.col is not None:
                pos += f", col {self.col}"
            return f"{pos}: {msg}"
        return msg
