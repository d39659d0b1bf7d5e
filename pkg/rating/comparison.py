"""
⚖️ Pairwise Comparison Matrices

Validation of symmetrically reciprocal matrices and the two objectives
of the rating problem:
- approximation error max_ij a_ij x_j / x_i  (log-Chebyshev, multiplicative form)
- contrast ratio max_i x_i / min_i x_i
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from tropical.errors import DimensionError, InvalidInputError, ReciprocityError
from tropical.matrix import TropicalMatrix, TropicalVector, outer, vec_conj
from tropical.scalars import Arithmetic, close, format_scalar, inverse
from tropical.solvers import quadratic_objective
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ComparisonMatrix:
    """
    Validated pairwise comparison matrix

    Build it with validate() or consistent_from_weights(); the constructor
    itself does not check reciprocity.
    """
    entries: TropicalMatrix
    labels: Optional[Tuple[str, ...]] = None

    @property
    def n(self) -> int:
        return self.entries.rows

    @property
    def arithmetic(self) -> Arithmetic:
        return self.entries.arithmetic

    def label(self, i: int) -> str:
        """Name of alternative i (0-based)"""
        if self.labels:
            return self.labels[i]
        return f"A{i + 1}"

    def permuted(self, order: Sequence[int]) -> "ComparisonMatrix":
        """Relabel alternatives: new alternative i is old alternative order[i]"""
        labels = tuple(self.labels[i] for i in order) if self.labels else None
        return ComparisonMatrix(self.entries.permuted(order), labels)


def validate(raw: TropicalMatrix, labels: Optional[Sequence[str]] = None,
             auto_symmetrize: bool = False) -> ComparisonMatrix:
    """
    Check that raw is a square positive symmetrically reciprocal matrix

    Args:
        raw: candidate matrix
        labels: optional names, one per alternative
        auto_symmetrize: rebuild the lower triangle as a_ji = 1/a_ij (i < j)
            so half-filled input is accepted

    Returns:
        ComparisonMatrix

    Raises:
        DimensionError: raw is not square
        InvalidInputError: nonpositive entry or wrong number of labels
        ReciprocityError: a_ij * a_ji != 1 for some pair
    """
    if not raw.is_square():
        raise DimensionError(f"comparison matrix must be square, got {raw.rows}x{raw.cols}")
    n = raw.rows
    if labels is not None and len(labels) != n:
        raise InvalidInputError(f"{len(labels)} labels for {n} alternatives")

    cells = raw.entries.copy()
    if auto_symmetrize:
        for i in range(n):
            for j in range(i + 1, n):
                if not cells[i, j] > 0:
                    raise InvalidInputError(f"entry ({i + 1},{j + 1}) must be positive")
                cells[j, i] = inverse(cells[i, j])
        logger.debug("lower triangle rebuilt from the upper triangle")

    bad = np.argwhere(~(cells > 0))
    if len(bad):
        i, j = bad[0]
        raise InvalidInputError(
            f"entry ({i + 1},{j + 1}) = {format_scalar(cells[i, j])} is not positive"
        )

    pairs = [
        (i, j) for i in range(n) for j in range(i, n)
        if not close(cells[i, j] * cells[j, i], 1)
    ]
    if pairs:
        raise ReciprocityError(pairs)

    return ComparisonMatrix(TropicalMatrix(cells), tuple(labels) if labels is not None else None)


def is_consistent(a: ComparisonMatrix) -> bool:
    """True iff a_ij = a_ik a_kj for all i, j, k"""
    m = a.entries.entries
    for k in range(a.n):
        through_k = m[:, k][:, None] * m[k, :][None, :]
        if not all(close(x, y) for x, y in zip(m.flat, through_k.flat)):
            return False
    return True


def consistent_approximation(x: TropicalVector) -> TropicalMatrix:
    """Consistent matrix X with x_ij = x_i / x_j"""
    if not x.is_regular():
        raise InvalidInputError("weight vector must be regular")
    return outer(x, vec_conj(x))


def consistent_from_weights(w: TropicalVector, labels: Optional[Sequence[str]] = None) -> ComparisonMatrix:
    """Comparison matrix a_ij = w_i / w_j"""
    return validate(consistent_approximation(w), labels)


def _check_scores(a: ComparisonMatrix, x: TropicalVector):
    if x.dim != a.n:
        raise DimensionError(f"score vector has {x.dim} entries, expected {a.n}")
    if not x.is_regular():
        raise InvalidInputError("score vector must be regular")


def objective(a: ComparisonMatrix, x: TropicalVector):
    """Approximation error max_ij a_ij x_j / x_i, i.e. x^- A x"""
    _check_scores(a, x)
    return quadratic_objective(a.entries, x)


def log_chebyshev_error(a: ComparisonMatrix, x: TropicalVector) -> float:
    """max_ij |log a_ij - log(x_i / x_j)|"""
    return math.log(float(objective(a, x)))


def contrast_ratio(x: TropicalVector):
    """max_i x_i * max_i x_i^-1"""
    if not x.is_regular():
        raise InvalidInputError("score vector must be regular")
    return x.max() * vec_conj(x).max()


def reciprocity_report(raw: TropicalMatrix) -> List[Tuple[int, int]]:
    """Offending (i, j) pairs (0-based, i <= j) without raising"""
    try:
        validate(raw)
    except ReciprocityError as e:
        return e.pairs
    return []
