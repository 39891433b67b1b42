"""latpoly custom exceptions utility."""
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union


class LatpolyError(Exception):

    """Base class of every latpoly error."""


class BaseOSError(LatpolyError):

    """Custom OSError."""

    def __init__(self, errno: int, strerror: str, filepath: Path):
        message = f"{filepath} {strerror} [Errno {errno}]"
        super().__init__(message)


class ReadPermissionError(BaseOSError):

    """Raises when the file does not have read permission."""


class WritePermissionError(BaseOSError):

    """Raises when the file does not have write permission."""


class DomainError(LatpolyError):

    """Raises when an operation is called outside of its parameter range."""

    def __init__(self, operation: str, msg: str):
        self.operation = operation
        super().__init__(f"{operation}: {msg}")


class NonIntegralNormalization(DomainError):

    """Raises when `2k²·area(P)` is not an integer (k incompatible with P)."""

    def __init__(self, area: Fraction, k: int):
        value = 2 * k * k * area
        super().__init__(
            "normalized_area",
            f"2·{k}²·{area} = {value} is not an integer"
            f" ({k} is not a multiple of the denominator)",
        )


class UnreachableArea(DomainError):

    """Raises when a normalized area cannot be realized by a construction."""

    def __init__(
        self,
        operation: str,
        value: int,
        low: Optional[int] = None,
        high: Optional[int] = None,
    ):
        if low is not None and high is not None:
            msg = f"normalized area {value} is outside of [{low}, {high}]"
        else:
            msg = f"normalized area {value} is not realized by any template"
        super().__init__(operation, msg)


class InvalidPolygon(LatpolyError):

    """Raises when a vertex cycle violates the polygon invariants."""


class ConstructionError(LatpolyError):

    """Raises when a constructor output fails its own post-verification.

    This always signals a bug, never a bad input.
    """


class ResourceLimit(LatpolyError):

    """Raises when an enumeration exceeds its configured node budget."""

    def __init__(self, budget: int, explored: int):
        self.budget = budget
        self.explored = explored
        super().__init__(
            f"node budget {budget} exceeded after exploring {explored} nodes;"
            " results are incomplete"
        )


class UnparsablePolygonFile(LatpolyError):

    """Raises when a polygon/figure file can not be parsed."""

    def __init__(self, path: Union[Path, str], err: Union[Exception, str]):
        type_ = type(err).__name__ if isinstance(err, Exception) else "ValueError"
        super().__init__(f"{path} {type_}: {err}")
