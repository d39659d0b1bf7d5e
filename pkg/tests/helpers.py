"""Example data and seeded generators shared by the tests"""

import random
from fractions import Fraction as F
from typing import List

from rating.comparison import ComparisonMatrix, validate
from tropical.matrix import TropicalMatrix

# Four alternatives, lambda = 2 (cycle 2 -> 3 -> 4 -> 2)
FOUR_ROWS = [
    [F(1), F(1, 3), F(1, 2), F(1, 3)],
    [F(3), F(1), F(4), F(1)],
    [F(2), F(1, 4), F(1), F(2)],
    [F(3), F(1), F(1, 2), F(1)],
]

FOUR_CSV = "1,1/3,1/2,1/3\n3,1,4,1\n2,1/4,1,2\n3,1,1/2,1\n"

# (lambda^-1 A)* for the four-alternative matrix
FOUR_STAR = [
    [F(1), F(1, 6), F(1, 3), F(1, 3)],
    [F(3), F(1), F(2), F(2)],
    [F(3, 2), F(1, 2), F(1), F(1)],
    [F(3, 2), F(1, 2), F(1), F(1)],
]

# Canonical score generators
B1 = [F(1, 3), F(1), F(1, 2), F(1, 2)]
B2 = [F(1, 6), F(1), F(1, 2), F(1, 2)]


def random_reciprocal(rng: random.Random, n: int, top: int = 9) -> ComparisonMatrix:
    """Reciprocal matrix with upper entries p/q, 1 <= p, q <= top"""
    rows = [[F(1)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            value = F(rng.randint(1, top), rng.randint(1, top))
            rows[i][j] = value
            rows[j][i] = 1 / value
    return validate(TropicalMatrix.from_rows(rows))


def random_weights(rng: random.Random, n: int, top: int = 9) -> List[F]:
    return [F(rng.randint(1, top), rng.randint(1, top)) for _ in range(n)]


def random_positive(rng: random.Random, rows: int, cols: int, top: int = 9) -> TropicalMatrix:
    return TropicalMatrix.from_rows(
        [[F(rng.randint(1, top), rng.randint(1, top)) for _ in range(cols)] for _ in range(rows)]
    )
