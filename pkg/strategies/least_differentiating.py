"""
📉 Least differentiating score vectors

Minimizes the contrast between the best and worst alternative over the
score family. The coefficient problem q^- u (B u)^- 1 is solved by
sparsifying B and enumerating one kept entry per row.
"""

from typing import Dict

from rating.family import ScoreFamily
from tropical.solvers import SolveOutcome, solve_min_ratio

from .base_strategy import BaseStrategy


class LeastDifferentiating(BaseStrategy):
    """
    Least differentiating representative

    Config options:
        selection_cap: row selections enumerated before truncating (default: 4096)
    """

    def __init__(self, config: Dict = None):
        super().__init__(config)

    def get_name(self) -> str:
        return "Least differentiating"

    def solve(self, family: ScoreFamily) -> SolveOutcome:
        a, p, q = self.contrast_problem(family)
        outcome = solve_min_ratio(a, p, q, cap=self.config['selection_cap'])
        if outcome.truncated:
            self.logger.warning(
                f"⚠️ selection enumeration truncated at {self.config['selection_cap']:,}"
            )
        return outcome
