"""
📈 Most differentiating score vectors

Maximizes the contrast between the best and worst alternative over the
score family. Picks the column k with the largest own contrast and the
row s holding its smallest entry, then fixes b_sk.
"""

from typing import Dict

from rating.family import ScoreFamily
from tropical.solvers import SolveOutcome, solve_max_ratio

from .base_strategy import BaseStrategy


class MostDifferentiating(BaseStrategy):
    """Most differentiating representative"""

    def __init__(self, config: Dict = None):
        super().__init__(config)

    def get_name(self) -> str:
        return "Most differentiating"

    def solve(self, family: ScoreFamily) -> SolveOutcome:
        a, p, q = self.contrast_problem(family)
        outcome = solve_max_ratio(a, p, q)
        s, k = outcome.canonical_pair
        self.logger.debug(f"fixed entry b_sk with k={k + 1}, s={s + 1}")
        if len(outcome.pairs) > 1:
            self.logger.info(f"{len(outcome.pairs)} tied (s, k) pairs enumerated")
        return outcome
