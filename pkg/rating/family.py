"""
Score families: every score vector that minimizes the approximation error
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from tropical.matrix import TropicalMatrix, TropicalVector, columns_collinear, mat_vec
from tropical.scalars import close, format_scalar
from tropical.solvers import solve_min_quadratic
from utils.logger import get_logger

from .comparison import ComparisonMatrix, contrast_ratio

logger = get_logger(__name__)


@dataclass(frozen=True)
class ScoreFamily:
    """
    All score vectors x = B u, u != 0

    generator holds pairwise non-collinear columns, each scaled so its
    largest entry is 1.
    """
    spectral_radius: object
    generator: TropicalMatrix

    @property
    def n(self) -> int:
        return self.generator.rows

    @property
    def size(self) -> int:
        return self.generator.cols

    def member(self, u: TropicalVector) -> TropicalVector:
        """Score vector B u"""
        return mat_vec(self.generator, u)


def canonical_columns(columns: Sequence[TropicalVector]) -> List[TropicalVector]:
    """Drop columns collinear to an earlier one, then scale each to max entry 1"""
    kept: List[TropicalVector] = []
    for column in columns:
        if not any(columns_collinear(column, other) for other in kept):
            kept.append(column)
    return [c.normalized() for c in kept]


def score_family(a: ComparisonMatrix) -> ScoreFamily:
    """
    Compute lambda and the canonical generator of (lambda^-1 A)*

    Returns:
        ScoreFamily
    """
    outcome = solve_min_quadratic(a.entries)
    star = outcome.families[0].generator
    columns = canonical_columns(star.columns())
    logger.debug(f"score family: lambda={format_scalar(outcome.optimum)}, "
                 f"{star.cols} star columns -> {len(columns)} generators")
    return ScoreFamily(outcome.optimum, TropicalMatrix.from_columns(columns))


def column_contrasts(f: ScoreFamily) -> list:
    """1^T b_j b_j^- 1 for every generator column"""
    return [contrast_ratio(c) for c in f.generator.columns()]


def unanimous_extremes(f: ScoreFamily) -> Tuple[List[int], List[int]]:
    """
    Alternatives scored highest (lowest) by every vector of the family

    Alternative i is always on top iff it attains the maximum of every
    generator column, and always at the bottom iff it attains every
    column minimum.

    Returns:
        (always_top, always_bottom) as 0-based indices
    """
    columns = f.generator.columns()
    top = [
        i for i in range(f.n)
        if all(close(c[i], c.max()) for c in columns)
    ]
    bottom = [
        i for i in range(f.n)
        if all(close(c[i], c.min()) for c in columns)
    ]
    return top, bottom
