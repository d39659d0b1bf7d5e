"""
📐 Max-times Matrix Algebra

Dense matrices and vectors over the semifield (R+, max, *, 0, 1):
- entrywise max as addition, max-of-products as multiplication
- conjugate transposition
- spectral radius via the maximum cycle geometric mean
- Kleene star I + A + ... + A^(n-1)

All values are immutable; every operation returns a new object.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Sequence, Tuple

import numpy as np

from .errors import DimensionError, InvalidInputError
from .scalars import (
    Arithmetic, Surd, close, format_scalar, inverse, is_exact, nth_root, to_scalar,
)
from utils.logger import get_logger

logger = get_logger(__name__)


def _as_exact(x):
    if isinstance(x, (Fraction, Surd)):
        return x
    if isinstance(x, (float, np.floating)):
        return Fraction(float(x))
    return Fraction(x)


_exact_cells = np.frompyfunc(_as_exact, 1, 1)
_reciprocal_cells = np.frompyfunc(inverse, 1, 1)


def _prepare(values, ndim: int) -> np.ndarray:
    """Copy into a read-only float64 or object array and check the invariants"""
    arr = np.asarray(values)
    if arr.ndim != ndim:
        raise DimensionError(f"expected {ndim}-d entries, got shape {arr.shape}")
    if 0 in arr.shape:
        raise DimensionError(f"dimensions must be positive, got shape {arr.shape}")
    if arr.dtype.kind == "f":
        arr = arr.astype(np.float64, copy=True)
    else:
        arr = np.asarray(_exact_cells(arr), dtype=object)
    if not (arr >= 0).all():
        raise InvalidInputError("max-times entries must be nonnegative")
    arr.setflags(write=False)
    return arr


def _arithmetic_of(arr: np.ndarray) -> Arithmetic:
    return Arithmetic.FLOAT if arr.dtype.kind == "f" else Arithmetic.RATIONAL


def _build(values, arithmetic: Arithmetic) -> np.ndarray:
    cells = np.array(values, dtype=object)
    converted = np.frompyfunc(lambda v: to_scalar(v, arithmetic), 1, 1)(cells)
    if arithmetic == Arithmetic.FLOAT:
        return np.asarray(converted, dtype=np.float64)
    return np.asarray(converted, dtype=object)


@dataclass(frozen=True, eq=False)
class TropicalVector:
    """Column vector over the max-times semifield"""
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _prepare(self.entries, 1))

    @classmethod
    def of(cls, values: Iterable, arithmetic: Arithmetic = Arithmetic.RATIONAL) -> "TropicalVector":
        return cls(_build(list(values), arithmetic))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def arithmetic(self) -> Arithmetic:
        return _arithmetic_of(self.entries)

    def is_regular(self) -> bool:
        """A vector is regular if it has no zero elements"""
        return bool((self.entries > 0).all())

    def is_zero(self) -> bool:
        return not bool((self.entries > 0).any())

    def max(self):
        return self.entries.max()

    def min(self):
        return self.entries.min()

    def scaled(self, c) -> "TropicalVector":
        return TropicalVector(self.entries * _coerce(c, self.arithmetic))

    def normalized(self) -> "TropicalVector":
        """Scale so that the largest entry is 1"""
        if self.is_zero():
            raise InvalidInputError("cannot normalize the zero vector")
        return self.scaled(inverse(self.max()))

    def as_column(self) -> "TropicalMatrix":
        return TropicalMatrix(self.entries.reshape(-1, 1))

    def to_list(self) -> list:
        return list(self.entries)

    def __len__(self) -> int:
        return self.dim

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TropicalVector):
            return NotImplemented
        if other.dim != self.dim:
            return False
        return all(close(x, y) for x, y in zip(self.entries, other.entries))

    __hash__ = None

    def __str__(self) -> str:
        return "(" + ", ".join(format_scalar(x) for x in self.entries) + ")"

    def __repr__(self) -> str:
        return f"TropicalVector{self}"


@dataclass(frozen=True, eq=False)
class TropicalMatrix:
    """Dense rows x cols matrix over the max-times semifield"""
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _prepare(self.entries, 2))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], arithmetic: Arithmetic = Arithmetic.RATIONAL) -> "TropicalMatrix":
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("rows must be nonempty and of equal length")
        return cls(_build(rows, arithmetic))

    @classmethod
    def from_columns(cls, columns: Sequence[TropicalVector]) -> "TropicalMatrix":
        if not columns:
            raise DimensionError("at least one column is required")
        if len({c.dim for c in columns}) != 1:
            raise DimensionError("columns must have equal dimension")
        return cls(np.stack([c.entries for c in columns], axis=1))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    @property
    def arithmetic(self) -> Arithmetic:
        return _arithmetic_of(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not bool((self.entries > 0).any())

    def is_row_regular(self) -> bool:
        """No zero rows"""
        return bool((self.entries > 0).any(axis=1).all())

    def column(self, j: int) -> TropicalVector:
        return TropicalVector(self.entries[:, j])

    def row(self, i: int) -> TropicalVector:
        return TropicalVector(self.entries[i, :])

    def columns(self) -> List[TropicalVector]:
        return [self.column(j) for j in range(self.cols)]

    def to_rows(self) -> List[list]:
        return [list(r) for r in self.entries]

    def astype(self, arithmetic: Arithmetic) -> "TropicalMatrix":
        if arithmetic == self.arithmetic:
            return self
        if arithmetic == Arithmetic.FLOAT:
            return TropicalMatrix(np.array([[float(x) for x in r] for r in self.entries], dtype=np.float64))
        return TropicalMatrix(np.asarray(_exact_cells(self.entries), dtype=object))

    def permuted(self, order: Sequence[int]) -> "TropicalMatrix":
        """P A P^T for the permutation sending position i to order[i]"""
        idx = np.asarray(order)
        return TropicalMatrix(self.entries[np.ix_(idx, idx)])

    def __getitem__(self, index):
        return self.entries[index]

    def __add__(self, other: "TropicalMatrix") -> "TropicalMatrix":
        return mat_add(self, other)

    def __matmul__(self, other):
        if isinstance(other, TropicalVector):
            return mat_vec(self, other)
        return mat_mul(self, other)

    def __rmul__(self, c) -> "TropicalMatrix":
        return scalar_scale(c, self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TropicalMatrix):
            return NotImplemented
        if other.shape != self.shape:
            return False
        return all(close(x, y) for x, y in zip(self.entries.flat, other.entries.flat))

    __hash__ = None

    def __str__(self) -> str:
        cells = [[format_scalar(x) for x in r] for r in self.entries]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("  ".join(c.rjust(width) for c in r) for r in cells)

    def __repr__(self) -> str:
        return f"TropicalMatrix({self.rows}x{self.cols})\n{self}"


# ==================== CONSTRUCTORS ====================

def _coerce(c, arithmetic: Arithmetic):
    if arithmetic == Arithmetic.FLOAT:
        return float(c)
    if not is_exact(c):
        raise InvalidInputError("float scalar used with a rational matrix")
    return _as_exact(c)


def identity(n: int, arithmetic: Arithmetic = Arithmetic.RATIONAL) -> TropicalMatrix:
    """Matrix with 1 along the diagonal and 0 elsewhere"""
    return TropicalMatrix.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], arithmetic)


def zeros(rows: int, cols: int, arithmetic: Arithmetic = Arithmetic.RATIONAL) -> TropicalMatrix:
    return TropicalMatrix.from_rows([[0] * cols for _ in range(rows)], arithmetic)


def ones(n: int, arithmetic: Arithmetic = Arithmetic.RATIONAL) -> TropicalVector:
    """The vector 1 with all elements equal to 1"""
    return TropicalVector.of([1] * n, arithmetic)


def _same_arithmetic(*items):
    kinds = {item.arithmetic for item in items}
    if len(kinds) != 1:
        raise InvalidInputError("cannot mix rational and float operands")


# ==================== SEMIRING OPERATIONS ====================

def mat_add(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    """a + b with entrywise max"""
    if a.shape != b.shape:
        raise DimensionError(f"cannot add {a.shape} and {b.shape}")
    _same_arithmetic(a, b)
    return TropicalMatrix(np.maximum(a.entries, b.entries))


def mat_mul(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    """a x b with result[i][j] = max_k a[i][k] * b[k][j]"""
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    _same_arithmetic(a, b)
    products = a.entries[:, :, None] * b.entries[None, :, :]
    return TropicalMatrix(products.max(axis=1))


def mat_vec(a: TropicalMatrix, x: TropicalVector) -> TropicalVector:
    """a x with result[i] = max_j a[i][j] * x[j]"""
    if a.cols != x.dim:
        raise DimensionError(f"cannot multiply {a.shape} by vector of size {x.dim}")
    _same_arithmetic(a, x)
    return TropicalVector((a.entries * x.entries[None, :]).max(axis=1))


def inner(row: TropicalVector, column: TropicalVector):
    """Row-by-column product max_i row[i] * column[i]"""
    if row.dim != column.dim:
        raise DimensionError(f"size mismatch {row.dim} vs {column.dim}")
    _same_arithmetic(row, column)
    return (row.entries * column.entries).max()


def outer(column: TropicalVector, row: TropicalVector) -> TropicalMatrix:
    """Column-by-row product, an m x n matrix of products"""
    _same_arithmetic(row, column)
    return TropicalMatrix(column.entries[:, None] * row.entries[None, :])


def scalar_scale(c, a: TropicalMatrix) -> TropicalMatrix:
    """Multiply every entry by c"""
    c = _coerce(c, a.arithmetic)
    if c < 0:
        raise InvalidInputError("scale factor must be nonnegative")
    return TropicalMatrix(a.entries * c)


def conjugate_transpose(a: TropicalMatrix) -> TropicalMatrix:
    """A^- with entries 1/a[j][i] where a[j][i] != 0 and 0 elsewhere"""
    if a.is_zero():
        raise InvalidInputError("conjugate transpose of the zero matrix is undefined")
    if a.arithmetic == Arithmetic.FLOAT:
        src = a.entries.T
        out = np.divide(1.0, src, out=np.zeros_like(src), where=src != 0)
        return TropicalMatrix(out)
    return TropicalMatrix(np.asarray(_reciprocal_cells(a.entries.T), dtype=object))


def vec_conj(x: TropicalVector) -> TropicalVector:
    """Entries of the row vector x^- (reciprocals, zeros kept)"""
    if x.is_zero():
        raise InvalidInputError("conjugate of the zero vector is undefined")
    return conjugate_transpose(x.as_column()).row(0)


def mat_power(a: TropicalMatrix, p: int) -> TropicalMatrix:
    """A^0 = I and A^p = A^(p-1) A"""
    if not a.is_square():
        raise DimensionError(f"power of a non-square {a.shape} matrix")
    if p < 0:
        raise InvalidInputError(f"power must be nonnegative, got {p}")
    result = identity(a.rows, a.arithmetic)
    for _ in range(p):
        result = mat_mul(result, a)
    return result


def kleene_star(a: TropicalMatrix) -> TropicalMatrix:
    """A* = I + A + ... + A^(n-1), accumulated by repeated multiplication"""
    if not a.is_square():
        raise DimensionError(f"Kleene star of a non-square {a.shape} matrix")
    result = identity(a.rows, a.arithmetic)
    power = result
    for _ in range(a.rows - 1):
        power = mat_mul(power, a)
        result = mat_add(result, power)
    return result


# ==================== SPECTRAL RADIUS ====================

class CycleMean(NamedTuple):
    """Maximizing cycle product and its length: lambda = product^(1/length)"""
    product: object
    length: int


def _beats(candidate: CycleMean, best: CycleMean) -> bool:
    """candidate.product^(1/k1) > best.product^(1/k2), compared without roots"""
    if is_exact(candidate.product) and is_exact(best.product):
        return candidate.product ** best.length > best.product ** candidate.length
    lhs = float(candidate.product) ** (1.0 / candidate.length)
    rhs = float(best.product) ** (1.0 / best.length)
    return lhs > rhs and not close(lhs, rhs)


def cycle_mean(a: TropicalMatrix) -> CycleMean:
    """
    Maximum cycle geometric mean as a (product, length) pair

    Scans lambda = max_k (max_i (A^k)[i][i])^(1/k) over k = 1..n; ties keep
    the shortest cycle.

    Raises:
        DimensionError: matrix is not square
    """
    if not a.is_square():
        raise DimensionError(f"spectral radius of a non-square {a.shape} matrix")
    power = a
    best = CycleMean(np.diagonal(a.entries).max(), 1)
    for k in range(2, a.rows + 1):
        power = mat_mul(power, a)
        candidate = CycleMean(np.diagonal(power.entries).max(), k)
        if _beats(candidate, best):
            best = candidate
    logger.debug(f"cycle mean: product={format_scalar(best.product)} length={best.length}")
    return best


def spectral_radius(a: TropicalMatrix):
    """
    Tropical spectral radius

    Rational matrices give a Fraction when the maximizing cycle product is a
    perfect power of its length and a Surd otherwise.
    """
    mean = cycle_mean(a)
    return nth_root(mean.product, mean.length)


# ==================== COLLINEARITY ====================

def columns_collinear(a: TropicalVector, b: TropicalVector) -> bool:
    """True iff a = c * b for some c > 0 (zeros must match positionally)"""
    if a.dim != b.dim:
        raise DimensionError(f"size mismatch {a.dim} vs {b.dim}")
    if a.is_zero() or b.is_zero():
        raise InvalidInputError("collinearity is undefined for the zero vector")
    support_a = a.entries > 0
    support_b = b.entries > 0
    if not np.array_equal(support_a, support_b):
        return False
    idx = np.flatnonzero(support_a)
    ratio = a.entries[idx[0]] / b.entries[idx[0]]
    return all(close(a.entries[i], ratio * b.entries[i]) for i in idx[1:])
