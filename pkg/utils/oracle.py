"""
🔍 Brute-force oracles

Slow, obviously-correct counterparts of the optimized routines, used by
the test suite only. Every search is bounded by a CostGuard and refuses
(LimitExceededError) instead of truncating.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from rating.comparison import ComparisonMatrix
from rating.family import ScoreFamily
from tropical.errors import DimensionError, InvalidInputError
from tropical.matrix import (
    CycleMean, TropicalMatrix, TropicalVector, mat_vec, vec_conj,
)
from tropical.scalars import nth_root
from utils.limits import ComputeLimits, CostGuard
from utils.logger import get_logger

logger = get_logger(__name__)

MIN = "min"
MAX = "max"
_CHUNK = 1 << 15
_LOG_TOL = 1e-12


@dataclass(frozen=True)
class LatticeSpec:
    """Geometric grid: points_per_axis values log-uniform in [1/r, r]"""
    points_per_axis: int = 25
    log_range: float = 10.0

    def __post_init__(self):
        if self.points_per_axis < 2:
            raise InvalidInputError(f"points_per_axis must be >= 2, got {self.points_per_axis}")
        if not self.log_range > 1:
            raise InvalidInputError(f"log_range must be > 1, got {self.log_range}")

    def axis(self) -> np.ndarray:
        r = float(self.log_range)
        return np.geomspace(1.0 / r, r, self.points_per_axis)


def _lattice(axis: np.ndarray, free: int) -> Iterator[np.ndarray]:
    """Chunks of lattice points with the first coordinate fixed to 1"""
    if free == 0:
        yield np.ones((1, 1))
        return
    shape = (len(axis),) * free
    total = len(axis) ** free
    for start in range(0, total, _CHUNK):
        idx = np.unravel_index(np.arange(start, min(start + _CHUNK, total)), shape)
        points = np.ones((len(idx[0]), free + 1))
        for d, col in enumerate(idx):
            points[:, d + 1] = axis[col]
        yield points


def _float_entries(a: TropicalMatrix) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in a.entries], dtype=np.float64)


def _closed_walks(a: TropicalMatrix, n: int) -> Iterator[CycleMean]:
    """
    Every closed walk i1 -> ... -> ik -> i1 with k <= n, listed once per
    rotation (i1 is the smallest index on the walk)
    """
    def extend(start: int, last: int, product, length: int):
        yield CycleMean(product * a[last, start], length)
        if length == n:
            return
        for nxt in range(start, n):
            yield from extend(start, nxt, product * a[last, nxt], length + 1)

    for start in range(n):
        yield from extend(start, start, a[start, start] ** 0, 1)


def _mean_exceeds(walk: CycleMean, best: CycleMean) -> bool:
    """
    walk.product^(1/k1) > best.product^(1/k2)

    Fractions compare walk^k2 against best^k1 exactly; floats compare
    log means with a small absolute margin.
    """
    if isinstance(walk.product, Fraction) and isinstance(best.product, Fraction):
        return walk.product ** best.length > best.product ** walk.length
    if walk.product <= 0:
        return False
    if best.product <= 0:
        return True
    lhs = math.log(float(walk.product)) / walk.length
    rhs = math.log(float(best.product)) / best.length
    return lhs - rhs > _LOG_TOL


def brute_force_spectral_radius(a: TropicalMatrix, limits: ComputeLimits = None):
    """
    Maximum over all index tuples (i1..ik), k = 1..n, of the k-th root of
    a[i1][i2] ... a[ik][i1]

    Candidates are compared through cross powers, so rational input never
    takes a root until the winner is known.

    Raises:
        DimensionError: a is not square
        LimitExceededError: n above the cycle enumeration limit
    """
    if not a.is_square():
        raise DimensionError(f"matrix must be square, got {a.shape}")
    n = a.rows
    CostGuard(limits).check_cycle_dim(n)
    best = CycleMean(a[0, 0] * 0, 1)
    examined = 0
    for walk in _closed_walks(a, n):
        examined += 1
        if _mean_exceeds(walk, best):
            best = walk
    logger.debug(f"cycle enumeration: {examined:,} walks, best length {best.length}")
    return nth_root(best.product, best.length)


def grid_search_objective_min(a: ComparisonMatrix, lattice: LatticeSpec = None,
                              limits: ComputeLimits = None) -> float:
    """
    Minimum of max_ij a_ij x_j / x_i over the lattice (x_1 = 1)

    An upper bound on the true minimum lambda.
    """
    lattice = lattice or LatticeSpec()
    n = a.n
    free = n - 1
    CostGuard(limits).check_points(n * lattice.points_per_axis ** free, "objective grid search")
    m = _float_entries(a.entries)
    best = np.inf
    for x in _lattice(lattice.axis(), free):
        # value[p] = max_ij a_ij x_j / x_i
        ratios = m[None, :, :] * x[:, None, :] / x[:, :, None]
        best = min(best, float(ratios.max(axis=(1, 2)).min()))
    logger.debug(f"grid objective minimum {best:.6g}")
    return best


def brute_force_contrast(f: ScoreFamily, lattice: LatticeSpec = None, extremum: str = MIN,
                         limits: ComputeLimits = None) -> float:
    """
    Extremal contrast ratio of B u over lattice-sampled u (u_1 = 1)

    Args:
        extremum: "min" or "max"
    """
    if extremum not in (MIN, MAX):
        raise InvalidInputError(f"extremum must be 'min' or 'max', got {extremum!r}")
    lattice = lattice or LatticeSpec()
    free = f.size - 1
    CostGuard(limits).check_points(lattice.points_per_axis ** free, "contrast search")
    b = _float_entries(f.generator)
    best = np.inf if extremum == MIN else -np.inf
    for u in _lattice(lattice.axis(), free):
        x = (b[None, :, :] * u[:, None, :]).max(axis=2)
        contrast = x.max(axis=1) / x.min(axis=1)
        if extremum == MIN:
            best = min(best, float(contrast.min()))
        else:
            best = max(best, float(contrast.max()))
    return best


def span_membership(b: TropicalMatrix, x: TropicalVector) -> bool:
    """
    Projection test for the column span of B

    u = (x^- B)^- is the largest u with B u <= x, so x lies in the span
    iff B u = x.
    """
    if b.rows != x.dim:
        raise DimensionError(f"B has {b.rows} rows, x has {x.dim} entries")
    if any(c.is_zero() for c in b.columns()):
        raise InvalidInputError("B must have nonzero columns")
    if not x.is_regular():
        raise InvalidInputError("x must be regular")
    if b.arithmetic != x.arithmetic:
        x = TropicalVector.of(x.to_list(), b.arithmetic)
    transposed = TropicalMatrix(b.entries.T)
    u = vec_conj(mat_vec(transposed, vec_conj(x)))
    return mat_vec(b, u) == x
