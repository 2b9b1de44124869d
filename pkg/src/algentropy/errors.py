"""Exception types shared across the package."""

from __future__ import annotations


class ZeroPolynomialError(ValueError):
    def __init__(self, what: str = "operation") -> None:
        super().__init__(f"zero polynomial is not accepted by {what}")


class NotMonicError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


class ZeroQuotientError(ValueError):
    """Raised when a kernel basis spans the whole space."""

    def __init__(self) -> None:
        super().__init__("quotient is zero-dimensional")


class BlockStructureError(ValueError):
    def __init__(self, row: int, col: int, value) -> None:
        self.row = row
        self.col = col
        super().__init__(
            f"matrix is not block upper-triangular: entry ({row}, {col}) = {value} "
            "lies in the lower-left block"
        )


class ShapeMismatchError(ValueError):
    pass


class RootFindingError(ArithmeticError):
    """Root isolation failed within the precision cap.

    ``radii`` holds the best per-root enclosure radii reached (``None`` for
    roots whose discs could not be separated).
    """

    def __init__(self, message: str, radii=None, precision_bits: int | None = None) -> None:
        super().__init__(message)
        self.radii = radii
        self.precision_bits = precision_bits


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.line = line
        self.column = column
