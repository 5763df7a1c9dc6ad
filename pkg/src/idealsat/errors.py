"""Exception types shared across the package."""


class IdealSatError(Exception):
    """Base class for package-specific failures."""


class DimensionError(IdealSatError, ValueError):
    """Operands were built over different ambient variable counts."""


class LimitError(IdealSatError, RuntimeError):
    """A desk-scale guardrail (ambient size, degree, table length, search space) was exceeded."""


class ParseError(IdealSatError, ValueError):
    """Malformed ideal or monomial text; carries the 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ReconstructionError(IdealSatError, RuntimeError):
    """An internal self-check failed; this indicates a bug, not bad input."""
