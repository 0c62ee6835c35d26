"""Exception hierarchy for lpvkit.

Decision procedures never raise for a negative answer; these exceptions
signal inputs the operations cannot work with.
"""

from pathlib import Path


class LpvKitError(Exception):
    """Base class for all lpvkit errors."""


class StructuralError(LpvKitError):
    """Raised when a model's matrix counts or shapes are inconsistent."""


class NonFiniteError(LpvKitError):
    """Raised when a matrix contains NaN or infinite entries."""

    def __init__(self, what: str) -> None:
        self.what = what
        super().__init__(f"{what} contains non-finite entries")


class DimensionMismatchError(LpvKitError):
    """Raised when two objects have incompatible signatures."""

    def __init__(self, expected: object, actual: object, what: str = "signature") -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(f"{what} mismatch: expected {expected}, got {actual}")


class FactorMismatchError(LpvKitError):
    """Raised when a factor pair does not reproduce its coefficient block."""

    def __init__(self, channel: int, residual: float) -> None:
        self.channel = channel
        self.residual = residual
        super().__init__(
            f"factor pair {channel} does not reproduce [A B; C D] (residual {residual:.3e})"
        )


class NotLpvLfrError(LpvKitError):
    """Raised when an operation needs an LPV-LFR and gets a general LFR."""

    def __init__(self, worst_block: float) -> None:
        self.worst_block = worst_block
        super().__init__(
            f"model is not an LPV-LFR: largest F[i,j] entry with i,j > 1 is {worst_block:.3e}"
        )


class SampleError(LpvKitError):
    """Raised for malformed parametrization samples."""


class ModelFileError(LpvKitError):
    """Raised when a model or signal file cannot be parsed."""

    def __init__(
        self,
        path: Path | str,
        message: str,
        line: int | None = None,
        column: int | None = None,
    ) -> None:
        self.path = str(path)
        self.message = message
        self.line = line
        self.column = column
        where = f"{self.path}:{line}:{column}" if line is not None else self.path
        super().__init__(f"{where}: {message}")
