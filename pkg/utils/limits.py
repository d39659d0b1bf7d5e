"""
Compute Limits Module
Hard limits that keep enumeration and brute-force searches total
"""

from dataclasses import dataclass

from tropical.errors import LimitExceededError
from utils.logger import get_logger


@dataclass
class ComputeLimits:
    """Limit configuration for the brute-force oracles"""
    cost_guard: int = 10 ** 7      # Max lattice points an oracle may evaluate
    max_cycle_dim: int = 8         # Max size for exhaustive cycle enumeration

    def __post_init__(self):
        if self.cost_guard < 1:
            raise ValueError(f"cost_guard must be >= 1, got {self.cost_guard}")
        if self.max_cycle_dim < 1:
            raise ValueError(f"max_cycle_dim must be >= 1, got {self.max_cycle_dim}")


class CostGuard:
    """
    Refuses work above a hard limit

    Never truncates silently: an oversized request raises LimitExceededError.
    """

    def __init__(self, limits: ComputeLimits = None):
        self.limits = limits or ComputeLimits()
        self.logger = get_logger("CostGuard")

    def can_evaluate(self, points: int) -> tuple[bool, str]:
        """
        Check whether a search of the given size is allowed

        Returns:
            (allowed, reason)
        """
        if points > self.limits.cost_guard:
            return False, f"{points:,} points > cost guard {self.limits.cost_guard:,}"
        return True, "OK"

    def check_points(self, points: int, what: str = "search"):
        allowed, reason = self.can_evaluate(points)
        if not allowed:
            self.logger.warning(f"🚫 {what} refused: {reason}")
            raise LimitExceededError(f"{what} refused: {reason}")

    def check_cycle_dim(self, n: int):
        if n > self.limits.max_cycle_dim:
            self.logger.warning(f"🚫 cycle enumeration refused for n={n}")
            raise LimitExceededError(
                f"cycle enumeration refused: n={n} > {self.limits.max_cycle_dim}"
            )
