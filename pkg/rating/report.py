"""
📊 Rating pipeline

Composes the score family with its least and most differentiating
representatives into one RatingReport.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from strategies.base_strategy import Representative
from strategies.least_differentiating import LeastDifferentiating
from strategies.most_differentiating import MostDifferentiating
from tropical.matrix import TropicalMatrix, TropicalVector
from tropical.scalars import close, format_scalar
from tropical.solvers import DEFAULT_SELECTION_CAP
from utils.logger import get_logger

from .comparison import ComparisonMatrix, contrast_ratio, is_consistent
from .family import ScoreFamily, column_contrasts, score_family, unanimous_extremes

logger = get_logger(__name__)


@dataclass
class RatingReport:
    """Everything the rating pipeline derives from one comparison matrix"""
    comparison: ComparisonMatrix
    family: ScoreFamily
    least_diff: TropicalVector
    most_diff: TropicalVector
    least_contrast: object
    most_contrast: object
    rankings: Dict[str, List[List[int]]]    # 'least' / 'most' -> tie groups, 0-based
    consistent: bool
    truncated: bool = False
    least_families: List[TropicalMatrix] = field(default_factory=list)
    most_families: List[TropicalMatrix] = field(default_factory=list)
    column_contrasts: list = field(default_factory=list)
    unanimous_top: List[int] = field(default_factory=list)
    unanimous_bottom: List[int] = field(default_factory=list)

    @property
    def spectral_radius(self):
        return self.family.spectral_radius

    @property
    def approximation_error(self) -> float:
        """log lambda, the minimal log-Chebyshev distance to a consistent matrix"""
        return math.log(float(self.family.spectral_radius))


def ranking(x: TropicalVector) -> List[List[int]]:
    """
    Alternatives by descending score, equal scores grouped

    Returns:
        Tie groups of 0-based indices, best first
    """
    order = sorted(range(x.dim), key=lambda i: x[i], reverse=True)
    groups: List[List[int]] = []
    for i in order:
        if groups and close(x[i], x[groups[-1][0]]):
            groups[-1].append(i)
        else:
            groups.append([i])
    return [sorted(g) for g in groups]


def select_least(f: ScoreFamily, cap: int = DEFAULT_SELECTION_CAP) -> Representative:
    return LeastDifferentiating({'selection_cap': cap}).select(f)


def select_most(f: ScoreFamily) -> Representative:
    return MostDifferentiating().select(f)


def least_differentiating(f: ScoreFamily, cap: int = DEFAULT_SELECTION_CAP) -> Tuple[TropicalVector, object]:
    """Score vector of the family with the smallest contrast ratio, and that ratio"""
    chosen = select_least(f, cap)
    return chosen.vector, chosen.contrast


def most_differentiating(f: ScoreFamily) -> Tuple[TropicalVector, object]:
    """Score vector of the family with the largest contrast ratio, and that ratio"""
    chosen = select_most(f)
    return chosen.vector, chosen.contrast


def rate(a: ComparisonMatrix, cap: int = DEFAULT_SELECTION_CAP) -> RatingReport:
    """
    Run the full rating pipeline

    Args:
        a: validated comparison matrix
        cap: row-selection cap for the least differentiating search

    Returns:
        RatingReport
    """
    logger.info(f"🚀 Rating {a.n} alternatives ({a.arithmetic.value} arithmetic)")
    family = score_family(a)
    logger.info(f"📊 Spectral radius {format_scalar(family.spectral_radius)}, "
                f"{family.size} generator column(s)")

    least = select_least(family, cap)
    most = select_most(family)
    top, bottom = unanimous_extremes(family)

    report = RatingReport(
        comparison=a,
        family=family,
        least_diff=least.vector,
        most_diff=most.vector,
        least_contrast=least.contrast,
        most_contrast=most.contrast,
        rankings={'least': ranking(least.vector), 'most': ranking(most.vector)},
        consistent=is_consistent(a),
        truncated=least.truncated,
        least_families=least.families,
        most_families=most.families,
        column_contrasts=column_contrasts(family),
        unanimous_top=top,
        unanimous_bottom=bottom,
    )
    if report.truncated:
        logger.warning("⚠️ Least differentiating families are incomplete (selection cap hit)")
    logger.info(f"✅ Contrast range [{format_scalar(report.least_contrast)}, "
                f"{format_scalar(report.most_contrast)}]")
    return report


def check_report(report: RatingReport) -> bool:
    """Re-evaluate the report's contrast invariants"""
    return (
        report.least_contrast <= report.most_contrast
        and close(contrast_ratio(report.least_diff), report.least_contrast)
        and close(contrast_ratio(report.most_diff), report.most_contrast)
        and report.least_diff.is_regular()
        and report.most_diff.is_regular()
    )
