# Rating Package
# The report pipeline lives in rating.report; it depends on the strategies
# package, which depends on the modules below.
from .comparison import (
    ComparisonMatrix,
    consistent_approximation,
    consistent_from_weights,
    contrast_ratio,
    is_consistent,
    log_chebyshev_error,
    objective,
    validate,
)
from .family import ScoreFamily, canonical_columns, column_contrasts, score_family, unanimous_extremes

__all__ = [
    'ComparisonMatrix', 'validate', 'is_consistent', 'consistent_from_weights',
    'consistent_approximation', 'objective', 'log_chebyshev_error', 'contrast_ratio',
    'ScoreFamily', 'score_family', 'canonical_columns', 'column_contrasts', 'unanimous_extremes',
]
