# Tropical (max-times) algebra package
from .errors import (
    DimensionError, InvalidInputError, LimitExceededError, ParseError,
    ReciprocityError, SchemaError, TropicalError, ZeroSpectralRadiusError,
)
from .scalars import Arithmetic, Surd, format_scalar, nth_root, parse_scalar, to_scalar
from .matrix import (
    CycleMean, TropicalMatrix, TropicalVector, columns_collinear, conjugate_transpose,
    cycle_mean, identity, kleene_star, mat_add, mat_mul, mat_power, mat_vec, ones,
    scalar_scale, spectral_radius, vec_conj, zeros,
)
from .solvers import (
    SelectionMatrix, SolveOutcome, SpanGenerators, enumerate_row_selections,
    solve_max_ratio, solve_min_quadratic, solve_min_ratio, sparsify,
)

__all__ = [
    'TropicalError', 'DimensionError', 'InvalidInputError', 'ZeroSpectralRadiusError',
    'LimitExceededError', 'ReciprocityError', 'ParseError', 'SchemaError',
    'Arithmetic', 'Surd', 'format_scalar', 'nth_root', 'parse_scalar', 'to_scalar',
    'TropicalMatrix', 'TropicalVector', 'CycleMean', 'identity', 'zeros', 'ones',
    'mat_add', 'mat_mul', 'mat_vec', 'scalar_scale', 'conjugate_transpose', 'vec_conj',
    'mat_power', 'kleene_star', 'cycle_mean', 'spectral_radius', 'columns_collinear',
    'SpanGenerators', 'SelectionMatrix', 'SolveOutcome', 'solve_min_quadratic',
    'sparsify', 'enumerate_row_selections', 'solve_min_ratio', 'solve_max_ratio',
]
