"""
Exceptions raised by the tropical and rating layers.

All of them are ValueErrors so callers that only care about
"bad input" can keep catching ValueError.
"""

from typing import List, Optional, Tuple


class TropicalError(ValueError):
    """Base class for every library error"""


class DimensionError(TropicalError):
    """Shape mismatch or a square matrix was required"""


class InvalidInputError(TropicalError):
    """Input violates a precondition (zero matrix, irregular vector, ...)"""


class ZeroSpectralRadiusError(TropicalError):
    """Spectral radius is zero, so lambda^-1 A does not exist"""


class LimitExceededError(TropicalError):
    """A configured hard limit (cost guard, enumeration size) was hit"""


class ReciprocityError(InvalidInputError):
    """
    Comparison matrix is not symmetrically reciprocal

    Attributes:
        pairs: offending (i, j) index pairs, 0-based, i <= j
    """

    def __init__(self, pairs: List[Tuple[int, int]]):
        self.pairs = list(pairs)
        shown = ", ".join(f"({i + 1},{j + 1})/({j + 1},{i + 1})" for i, j in self.pairs[:10])
        more = f" and {len(self.pairs) - 10} more" if len(self.pairs) > 10 else ""
        super().__init__(f"Reciprocity violated at {shown}{more}")


class ParseError(InvalidInputError):
    """Unreadable matrix input; line and column are 1-based"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(f"{where}{message}")


class SchemaError(InvalidInputError):
    """JSON document does not follow the expected schema"""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")
