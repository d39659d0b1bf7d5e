"""Tests for max-times matrix algebra"""

from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from tests.helpers import FOUR_ROWS, FOUR_STAR, random_positive, random_reciprocal
from tropical.errors import DimensionError, InvalidInputError
from tropical.matrix import (
    TropicalMatrix, TropicalVector, columns_collinear, conjugate_transpose, cycle_mean,
    identity, inner, kleene_star, mat_add, mat_mul, mat_power, mat_vec, outer, scalar_scale,
    spectral_radius, vec_conj, zeros,
)
from tropical.scalars import Arithmetic, Surd, inverse

SMALL = [F(0), F(1, 4), F(1, 3), F(1, 2), F(1), F(2), F(3), F(4)]


def matrices(n: int, positive: bool = False):
    values = st.sampled_from(SMALL[1:] if positive else SMALL)
    rows = st.lists(st.lists(values, min_size=n, max_size=n), min_size=n, max_size=n)
    return rows.map(TropicalMatrix.from_rows)


def triples(positive: bool = False):
    return st.integers(1, 4).flatmap(
        lambda n: st.tuples(matrices(n, positive), matrices(n, positive), matrices(n, positive))
    )


def naive_product(a: TropicalMatrix, b: TropicalMatrix) -> list:
    return [
        [max(a[i, k] * b[k, j] for k in range(a.cols)) for j in range(b.cols)]
        for i in range(a.rows)
    ]


# ==================== GOLDEN DATA ====================

def test_four_alternative_spectral_radius(four_matrix):
    """Test that lambda = 2 exactly, from the cycle 2 -> 3 -> 4 -> 2"""
    lam = spectral_radius(four_matrix)
    assert lam == 2
    assert isinstance(lam, F)
    assert cycle_mean(four_matrix) == (8, 3)


def test_four_alternative_kleene_star(four_matrix):
    """Test that (lambda^-1 A)* matches the hand-computed closure entry for entry"""
    scaled = scalar_scale(F(1, 2), four_matrix)
    assert scaled[1, 2] == 2
    assert scaled[2, 1] == F(1, 8)
    star = kleene_star(scaled)
    assert star.to_rows() == FOUR_STAR


def test_star_from_explicit_powers(four_matrix):
    """Test that I + A + A^2 + A^3 agrees with kleene_star"""
    scaled = F(1, 2) * four_matrix
    total = identity(4)
    for p in range(1, 4):
        total = total + mat_power(scaled, p)
    assert total == kleene_star(scaled)


def test_float_mode_matches_rational(four_matrix):
    """Test the float realization against the exact one"""
    fm = TropicalMatrix.from_rows(FOUR_ROWS, Arithmetic.FLOAT)
    assert fm.arithmetic == Arithmetic.FLOAT
    assert spectral_radius(fm) == pytest.approx(2.0, rel=1e-12)
    star = kleene_star(scalar_scale(0.5, fm))
    np.testing.assert_allclose(star.entries, np.array(FOUR_STAR, dtype=float), rtol=1e-12)
    assert four_matrix.astype(Arithmetic.FLOAT) == fm


# ==================== BASIC OPERATIONS ====================

def test_mat_add_entrywise_max():
    """Test the hand-computed sum"""
    a = TropicalMatrix.from_rows([[1, 2], [3, 4]])
    b = TropicalMatrix.from_rows([[4, 1], [2, 5]])
    assert (a + b).to_rows() == [[4, 2], [3, 5]]


def test_shape_mismatch_raises():
    """Test dimension errors for incompatible shapes"""
    a = TropicalMatrix.from_rows([[1, 2], [3, 4]])
    b = TropicalMatrix.from_rows([[1, 2, 3]])
    with pytest.raises(DimensionError):
        mat_add(a, b)
    with pytest.raises(DimensionError):
        mat_mul(b, b)
    with pytest.raises(DimensionError):
        mat_vec(a, TropicalVector.of([1, 2, 3]))
    with pytest.raises(DimensionError):
        spectral_radius(b)
    with pytest.raises(DimensionError):
        kleene_star(b)


def test_negative_entries_rejected():
    """Test that entries must be nonnegative"""
    with pytest.raises(InvalidInputError):
        TropicalMatrix.from_rows([[1, -1], [1, 1]])
    with pytest.raises(DimensionError):
        TropicalMatrix.from_rows([[1, 2], [3]])


def test_mixed_arithmetic_rejected(four_matrix):
    """Test that rational and float operands are not combined"""
    with pytest.raises(InvalidInputError):
        mat_mul(four_matrix, four_matrix.astype(Arithmetic.FLOAT))


def test_scalar_scale_edge_cases(four_matrix):
    """Test scaling by one and by zero"""
    assert scalar_scale(1, four_matrix) == four_matrix
    assert scalar_scale(0, four_matrix).is_zero()
    assert scalar_scale(0, four_matrix) == zeros(4, 4)


def test_conjugate_transpose_example():
    """Test reciprocals of the transpose with zeros kept"""
    a = TropicalMatrix.from_rows([[1, 0], [2, 4]])
    assert conjugate_transpose(a).to_rows() == [[1, F(1, 2)], [0, F(1, 4)]]
    with pytest.raises(InvalidInputError):
        conjugate_transpose(zeros(2, 3))


def test_conjugate_of_reciprocal_matrix_is_itself(four_matrix):
    """Test that A^- = A for a symmetrically reciprocal matrix"""
    assert conjugate_transpose(four_matrix) == four_matrix


def test_vector_conjugate_and_normalization():
    """Test row conjugates and scaling to max 1"""
    x = TropicalVector.of([2, F(1, 2), 4])
    assert vec_conj(x).to_list() == [F(1, 2), 2, F(1, 4)]
    assert x.normalized().to_list() == [F(1, 2), F(1, 8), 1]
    with pytest.raises(InvalidInputError):
        TropicalVector.of([0, 0]).normalized()


def test_spectral_radius_of_diagonal_matrix():
    """Test that only self-loops count for a diagonal matrix"""
    d = TropicalMatrix.from_rows([[F(1, 2), 0, 0], [0, 3, 0], [0, 0, 2]])
    assert spectral_radius(d) == 3


def test_spectral_radius_can_be_irrational():
    """Test that an irrational cycle mean is kept exact"""
    a = TropicalMatrix.from_rows([[0, 1], [2, 0]])
    lam = spectral_radius(a)
    assert isinstance(lam, Surd)
    assert lam * lam == 2
    star = kleene_star(scalar_scale(inverse(lam), a))
    assert mat_mul(star, star) == star


def test_spectral_radius_ties_keep_shortest_cycle():
    """Test the reported cycle length when cycles of different length tie"""
    a = TropicalMatrix.from_rows([[2, 4], [1, 1]])
    assert cycle_mean(a).length == 1
    assert spectral_radius(a) == 2


def test_collinearity():
    """Test collinearity up to a positive factor with matching zeros"""
    x = TropicalVector.of([1, 2, 0])
    assert columns_collinear(x, x.scaled(F(3, 7)))
    assert not columns_collinear(x, TropicalVector.of([1, 2, 1]))
    assert not columns_collinear(x, TropicalVector.of([1, 3, 0]))


def test_permutation_keeps_spectral_radius(four_matrix):
    """Test that relabeling does not change lambda"""
    assert spectral_radius(four_matrix.permuted([3, 1, 0, 2])) == 2


def test_product_agrees_with_naive_loop(rng):
    """Test the broadcast product against a triple loop"""
    for _ in range(20):
        a = random_positive(rng, 3, 4)
        b = random_positive(rng, 4, 2)
        assert mat_mul(a, b).to_rows() == naive_product(a, b)


# ==================== ALGEBRAIC PROPERTIES ====================

@given(triples())
def test_addition_axioms(abc):
    """Test idempotent, commutative, associative addition with neutral zero"""
    a, b, c = abc
    assert a + a == a
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert zeros(a.rows, a.cols) + a == a


@given(triples())
def test_multiplication_axioms(abc):
    """Test associativity, distributivity and the identity"""
    a, b, c = abc
    eye = identity(a.rows)
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))
    assert mat_mul(a, b + c) == mat_mul(a, b) + mat_mul(a, c)
    assert mat_mul(a + b, c) == mat_mul(a, c) + mat_mul(b, c)
    assert mat_mul(eye, a) == a
    assert mat_mul(a, eye) == a


@given(st.integers(1, 4).flatmap(matrices))
def test_conjugate_involution(a):
    """Test that (A^-)^- = A"""
    assume(not a.is_zero())
    assert conjugate_transpose(conjugate_transpose(a)) == a


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: matrices(n, positive=True)))
def test_star_is_idempotent_after_scaling(a):
    """Test that A* A* = A* once lambda(A) <= 1"""
    scaled = scalar_scale(inverse(spectral_radius(a)), a)
    star = kleene_star(scaled)
    assert mat_mul(star, star) == star
    assert spectral_radius(scaled) == 1


@settings(deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: matrices(n, positive=True)),
       st.sampled_from([F(1, 3), F(1, 2), F(2), F(5)]))
def test_spectral_radius_is_homogeneous(a, c):
    """Test that lambda(c A) = c lambda(A)"""
    assert spectral_radius(scalar_scale(c, a)) == c * spectral_radius(a)


def test_reciprocal_matrices_have_radius_at_least_one(rng):
    """Test the 2-cycle lower bound lambda >= 1"""
    for n in (2, 3, 4, 5):
        a = random_reciprocal(rng, n)
        assert spectral_radius(a.entries) >= 1


def test_inner_and_outer_products():
    """Test row-by-column and column-by-row products"""
    x = TropicalVector.of([1, F(1, 2), 3])
    y = TropicalVector.of([2, 4, F(1, 3)])
    assert inner(x, y) == 2
    assert outer(x, y).to_rows() == [
        [2, 4, F(1, 3)],
        [1, 2, F(1, 6)],
        [6, 12, 1],
    ]
    with pytest.raises(DimensionError):
        inner(x, TropicalVector.of([1, 1]))
