# Strategies Package
from .base_strategy import BaseStrategy, Representative
from .least_differentiating import LeastDifferentiating
from .most_differentiating import MostDifferentiating

__all__ = ['BaseStrategy', 'Representative', 'LeastDifferentiating', 'MostDifferentiating']
