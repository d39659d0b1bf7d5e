"""
Base Strategy Class
All representative-selection strategies inherit from this
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from rating.comparison import contrast_ratio
from rating.family import ScoreFamily, canonical_columns
from tropical.matrix import TropicalMatrix, TropicalVector, mat_mul, ones, vec_conj
from tropical.scalars import close, format_scalar
from tropical.solvers import DEFAULT_SELECTION_CAP, SolveOutcome, SpanGenerators, deduplicate
from utils.logger import get_logger


@dataclass
class Representative:
    """A representative score vector and everything it was picked from"""
    vector: TropicalVector
    contrast: object
    families: List[TropicalMatrix]   # canonical score generators, one per family
    truncated: bool
    outcome: SolveOutcome


class BaseStrategy(ABC):
    """
    Abstract base class for picking representatives out of a score family

    Provides common functionality:
    - contrast problem setup (p = 1, q^- = 1^T B)
    - mapping solution families back to score vectors x = B u
    - canonical representative selection
    - Logging
    """

    def __init__(self, config: Dict = None):
        """
        Initialize strategy

        Args:
            config: Strategy-specific configuration
        """
        default_config = {
            'selection_cap': DEFAULT_SELECTION_CAP,   # Max row selections enumerated
        }
        if config:
            default_config.update(config)
        self.config = default_config
        self.logger = get_logger(self.__class__.__name__)

    # ==================== ABSTRACT METHODS ====================

    @abstractmethod
    def solve(self, family: ScoreFamily) -> SolveOutcome:
        """
        Solve the contrast problem over the coefficients u

        Returns:
            SolveOutcome whose families generate the optimal u
        """
        pass

    @abstractmethod
    def get_name(self) -> str:
        """Return strategy name"""
        pass

    # ==================== COMMON METHODS ====================

    def contrast_problem(self, family: ScoreFamily) -> Tuple[TropicalMatrix, TropicalVector, TropicalVector]:
        """
        Contrast 1^T B u (B u)^- 1 as q^- u (A u)^- p

        Returns:
            (A, p, q) = (B, 1, (1^T B)^-)
        """
        b = family.generator
        column_max = TropicalVector(b.entries.max(axis=0))
        return b, ones(b.rows, b.arithmetic), vec_conj(column_max)

    def select(self, family: ScoreFamily) -> Representative:
        """
        Solve, map every family through B and keep the first column of the first

        Returns:
            Representative scaled to max entry 1
        """
        outcome = self.solve(family)
        mapped = [
            SpanGenerators(
                TropicalMatrix.from_columns(
                    canonical_columns(mat_mul(family.generator, f.generator).columns())
                ),
                f.provenance,
            )
            for f in outcome.families
        ]
        mapped = deduplicate(mapped)
        vector = mapped[0].generator.column(0)
        contrast = contrast_ratio(vector)
        if not close(contrast, outcome.optimum):
            self.logger.warning(
                f"⚠️ representative contrast {format_scalar(contrast)} "
                f"differs from optimum {format_scalar(outcome.optimum)}"
            )
        self.logger.debug(
            f"{self.get_name()}: contrast {format_scalar(outcome.optimum)}, "
            f"{len(mapped)} family(ies), vector {vector}"
        )
        return Representative(
            vector=vector,
            contrast=outcome.optimum,
            families=[m.generator for m in mapped],
            truncated=outcome.truncated,
            outcome=outcome,
        )

    def get_stats(self, representative: Representative) -> Dict[str, Any]:
        """Summary of a selection"""
        return {
            'strategy': self.get_name(),
            'contrast': format_scalar(representative.contrast),
            'families': len(representative.families),
            'examined': representative.outcome.selections_examined,
            'truncated': representative.truncated,
        }
