"""
🎯 Closed-form tropical optimization solvers

Three problems, each solved into generator matrices whose column spans
hold every regular solution:
- minimize x^- A x                    (spectral radius + Kleene star)
- minimize q^- x (A x)^- p            (sparsification + row selections)
- maximize q^- x (A x)^- p            (single fixed entry A_sk)
"""

import itertools
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from .errors import DimensionError, InvalidInputError, ZeroSpectralRadiusError
from .matrix import (
    TropicalMatrix, TropicalVector, columns_collinear, conjugate_transpose, identity,
    inner, kleene_star, mat_add, mat_mul, mat_vec, outer, scalar_scale, spectral_radius,
    vec_conj,
)
from .scalars import at_least, close, format_scalar, inverse
from utils.logger import get_logger

logger = get_logger(__name__)

# Row selections enumerated before the search is truncated
DEFAULT_SELECTION_CAP = 4096


@dataclass(frozen=True)
class SpanGenerators:
    """Solution family {generator x u : u != 0}"""
    generator: TropicalMatrix
    provenance: str

    def __post_init__(self):
        if any(col.is_zero() for col in self.generator.columns()):
            raise InvalidInputError(f"zero generator column ({self.provenance})")


@dataclass(frozen=True)
class SelectionMatrix:
    """
    A base matrix with designated entries kept and all others zeroed

    kept holds one (row, col) pair per row for row selections, or a single
    (s, k) pair for a single fixed entry.
    """
    base: TropicalMatrix
    kept: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        rows, cols = self.base.shape
        if not self.kept:
            raise InvalidInputError("a selection needs at least one kept entry")
        if len(self.kept) > 1 and [i for i, _ in self.kept] != list(range(rows)):
            raise InvalidInputError(
                f"kept entries {self.describe()} are neither one per row nor a single entry"
            )
        for i, j in self.kept:
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionError(f"selected entry ({i + 1},{j + 1}) is outside {self.base.shape}")
            if not self.base[i, j] > 0:
                raise InvalidInputError(f"selected entry ({i + 1},{j + 1}) is zero")

    @property
    def matrix(self) -> TropicalMatrix:
        zero = self.base.entries.flat[0] * 0
        cells = np.full(self.base.shape, zero, dtype=self.base.entries.dtype)
        for i, j in self.kept:
            cells[i, j] = self.base[i, j]
        return TropicalMatrix(cells)

    def describe(self) -> str:
        return ",".join(f"({i + 1},{j + 1})" for i, j in self.kept)


@dataclass
class SolveOutcome:
    """Optimal value plus the solution families that attain it"""
    optimum: object
    families: List[SpanGenerators]
    truncated: bool = False
    selections_examined: int = 0
    canonical_pair: Optional[Tuple[int, int]] = None
    pairs: List[Tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.optimum > 0:
            raise InvalidInputError("optimum must be positive")
        if not self.families:
            raise InvalidInputError("at least one solution family is required")


class RowSelections(NamedTuple):
    selections: List[SelectionMatrix]
    truncated: bool
    total: int


# ==================== OBJECTIVES ====================

def quadratic_objective(a: TropicalMatrix, x: TropicalVector):
    """x^- A x"""
    if not x.is_regular():
        raise InvalidInputError("x must be regular")
    return inner(vec_conj(x), mat_vec(a, x))


def ratio_objective(a: TropicalMatrix, p: TropicalVector, q: TropicalVector, x: TropicalVector):
    """q^- x (A x)^- p"""
    ax = mat_vec(a, x)
    if not ax.is_regular():
        raise InvalidInputError("A x must be regular")
    return inner(vec_conj(q), x) * inner(vec_conj(ax), p)


# ==================== HELPERS ====================

def _same_span(first: TropicalMatrix, second: TropicalMatrix) -> bool:
    """Every column of each generator is collinear to some column of the other"""
    def covered(src, dst):
        return all(any(columns_collinear(c, d) for d in dst.columns()) for c in src.columns())
    return first.rows == second.rows and covered(first, second) and covered(second, first)


def deduplicate(families: List[SpanGenerators]) -> List[SpanGenerators]:
    """Drop families whose generator columns match an earlier family up to scale"""
    kept: List[SpanGenerators] = []
    for family in families:
        if not any(_same_span(family.generator, other.generator) for other in kept):
            kept.append(family)
    return kept


def _require_regular(v: TropicalVector, name: str):
    if not v.is_regular():
        raise InvalidInputError(f"{name} must be regular (no zero entries)")


# ==================== MINIMIZE x^- A x ====================

def solve_min_quadratic(a: TropicalMatrix) -> SolveOutcome:
    """
    Minimize x^- A x over regular x

    Returns:
        SolveOutcome with optimum lambda and the single family (lambda^-1 A)*

    Raises:
        DimensionError: a is not square
        ZeroSpectralRadiusError: lambda = 0
    """
    if not a.is_square():
        raise DimensionError(f"matrix must be square, got {a.shape}")
    lam = spectral_radius(a)
    if lam == 0:
        raise ZeroSpectralRadiusError("spectral radius is zero")
    generator = kleene_star(scalar_scale(inverse(lam), a))
    logger.debug(f"min x^-Ax: lambda={format_scalar(lam)}")
    return SolveOutcome(lam, [SpanGenerators(generator, "(lambda^-1 A)*")])


# ==================== MINIMIZE q^- x (A x)^- p ====================

def _check_min_ratio_inputs(a: TropicalMatrix, p: TropicalVector, q: TropicalVector):
    if p.dim != a.rows or q.dim != a.cols:
        raise DimensionError(f"p, q sizes ({p.dim}, {q.dim}) do not fit A {a.shape}")
    if not a.is_row_regular():
        raise InvalidInputError("A must be row-regular")
    if p.is_zero():
        raise InvalidInputError("p must be nonzero")
    _require_regular(q, "q")


def min_ratio_value(a: TropicalMatrix, p: TropicalVector, q: TropicalVector):
    """Delta = (A q)^- p"""
    return inner(vec_conj(mat_vec(a, q)), p)


def sparsify(a: TropicalMatrix, p: TropicalVector, q: TropicalVector, delta) -> TropicalMatrix:
    """
    Keep a[i][j] when a[i][j] >= delta^-1 p[i] q[j]^-1, zero it otherwise

    Raises:
        InvalidInputError: A not row-regular, p zero, q irregular, or delta
            differs from (A q)^- p
    """
    _check_min_ratio_inputs(a, p, q)
    if not close(delta, min_ratio_value(a, p, q)):
        raise InvalidInputError(f"delta {format_scalar(delta)} is not (A q)^- p")
    threshold = outer(p, vec_conj(q)).entries * inverse(delta)
    keep = np.array([
        [at_least(x, t) for x, t in zip(row, trow)]
        for row, trow in zip(a.entries, threshold)
    ])
    zero = a.entries.flat[0] * 0
    result = TropicalMatrix(np.where(keep, a.entries, zero))
    if not result.is_row_regular():
        raise InvalidInputError("sparsified matrix lost a row")
    return result


def enumerate_row_selections(a_hat: TropicalMatrix, cap: int = DEFAULT_SELECTION_CAP) -> RowSelections:
    """
    Fix one nonzero entry in each row, in row-major lexicographic order

    Args:
        a_hat: row-regular matrix
        cap: maximum number of selections returned

    Returns:
        RowSelections with the truncated flag set when more than cap exist
    """
    if cap < 1:
        raise InvalidInputError(f"cap must be >= 1, got {cap}")
    choices = []
    for i in range(a_hat.rows):
        nonzero = [int(j) for j in np.flatnonzero(a_hat.entries[i] > 0)]
        if not nonzero:
            raise InvalidInputError(f"row {i + 1} has no nonzero entry")
        choices.append(nonzero)
    total = int(np.prod([len(c) for c in choices], dtype=object))
    selections = [
        SelectionMatrix(a_hat, tuple(enumerate(cols)))
        for cols in itertools.islice(itertools.product(*choices), cap)
    ]
    if total > cap:
        logger.warning(f"⚠️ {total:,} row selections, keeping the first {cap:,}")
    return RowSelections(selections, total > cap, total)


def solve_min_ratio(a: TropicalMatrix, p: TropicalVector, q: TropicalVector,
                    cap: int = DEFAULT_SELECTION_CAP) -> SolveOutcome:
    """
    Minimize q^- x (A x)^- p over regular x

    The optimum is Delta = (A q)^- p; each row selection A1 of the
    sparsified matrix gives the family I + Delta^-1 A1^- p q^-.
    Families spanning the same rays are merged.
    """
    _check_min_ratio_inputs(a, p, q)
    delta = min_ratio_value(a, p, q)
    a_hat = sparsify(a, p, q, delta)
    batch = enumerate_row_selections(a_hat, cap)
    eye = identity(a.cols, a.arithmetic)
    q_conj = vec_conj(q)
    families = []
    for selection in batch.selections:
        pulled = mat_vec(conjugate_transpose(selection.matrix), p)
        term = scalar_scale(inverse(delta), outer(pulled, q_conj))
        families.append(SpanGenerators(mat_add(eye, term), f"row selection {selection.describe()}"))
    unique = deduplicate(families)
    logger.debug(f"min ratio: Delta={format_scalar(delta)}, "
                 f"{len(batch.selections)} selections -> {len(unique)} families")
    return SolveOutcome(delta, unique, truncated=batch.truncated,
                        selections_examined=len(batch.selections))


# ==================== MAXIMIZE q^- x (A x)^- p ====================

def max_ratio_value(a: TropicalMatrix, p: TropicalVector, q: TropicalVector):
    """Delta = q^- A^- p"""
    return inner(vec_conj(q), mat_vec(conjugate_transpose(a), p))


def maximizing_pairs(a: TropicalMatrix, p: TropicalVector, q: TropicalVector) -> List[Tuple[int, int]]:
    """
    All (s, k) with k in argmax_j q_j^-1 a_j^- p and s in argmax_i a_ik^-1 p_i

    Sorted by (k, s); ties are kept.
    """
    a_conj = conjugate_transpose(a)
    column_scores = [inverse(q[j]) * inner(a_conj.row(j), p) for j in range(a.cols)]
    best = max(column_scores)
    pairs = []
    for k, score in enumerate(column_scores):
        if not close(score, best):
            continue
        row_scores = [inverse(a[i, k]) * p[i] for i in range(a.rows)]
        top = max(row_scores)
        pairs.extend((s, k) for s, value in enumerate(row_scores) if close(value, top))
    return sorted(pairs, key=lambda sk: (sk[1], sk[0]))


def solve_max_ratio(a: TropicalMatrix, p: TropicalVector, q: TropicalVector) -> SolveOutcome:
    """
    Maximize q^- x (A x)^- p over regular x

    The optimum is Delta = q^- A^- p. Every maximizing pair (s, k) gives
    the family I + A_sk^- A where A_sk keeps only a[s][k].

    Raises:
        InvalidInputError: a column of A has a zero, or p, q irregular
    """
    if p.dim != a.rows or q.dim != a.cols:
        raise DimensionError(f"p, q sizes ({p.dim}, {q.dim}) do not fit A {a.shape}")
    if not bool((a.entries > 0).all()):
        raise InvalidInputError("every column of A must be regular")
    _require_regular(p, "p")
    _require_regular(q, "q")
    delta = max_ratio_value(a, p, q)
    pairs = maximizing_pairs(a, p, q)
    eye = identity(a.cols, a.arithmetic)
    families = []
    for s, k in pairs:
        fixed = SelectionMatrix(a, ((s, k),))
        generator = mat_add(eye, mat_mul(conjugate_transpose(fixed.matrix), a))
        families.append(SpanGenerators(generator, f"fixed entry ({s + 1},{k + 1})"))
    unique = deduplicate(families)
    canonical = pairs[0]
    logger.debug(f"max ratio: Delta={format_scalar(delta)}, k={canonical[1] + 1}, "
                 f"s={canonical[0] + 1}, {len(pairs)} pair(s)")
    return SolveOutcome(delta, unique, canonical_pair=canonical, pairs=pairs,
                        selections_examined=len(pairs))
