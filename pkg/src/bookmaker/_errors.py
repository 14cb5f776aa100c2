"""Error types for bookmaker."""

from pathlib import Path


class BookmakerError(Exception):
    """Base exception for all bookmaker errors."""


class DomainError(BookmakerError):
    """Raised when arguments or tables fall outside their valid domain."""


class EmptyTableError(DomainError):
    """Raised when a contingency table has no instances."""

    def __init__(self, message: str = "empty table"):
        super().__init__(message)


class UndefinedMeasureError(DomainError):
    """Raised when a measure's denominator margin is zero."""

    def __init__(self, measure: str, margin: str, message: str | None = None):
        self.measure = measure
        self.margin = margin
        if message is None:
            message = f"{measure} is undefined: {margin} = 0"
        super().__init__(message)


class InfeasibleParametersError(DomainError):
    """Raised when no contingency table realizes the requested parameters."""

    def __init__(self, message: str, value: float):
        self.value = value
        super().__init__(f"{message} (got {value!r})")


class InputFileError(BookmakerError):
    """Raised when a label or score file cannot be parsed."""

    def __init__(self, path: str | Path, line: int | None, reason: str):
        self.path = str(path)
        self.line = line
        self.reason = reason

        location = self.path if line is None else f"{self.path}:{line}"
        super().__init__(f"{location}: {reason}")
