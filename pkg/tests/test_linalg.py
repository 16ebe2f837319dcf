from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from src.exceptions import (
    LaurentRankError,
    NegativeExponentError,
    NonInvertibleError,
    RankMismatchError,
    RingMismatchError,
)
from src.linalg.elimination import bareiss_rank, gaussian_rank
from src.linalg.matrix import (
    IndexedMatrix,
    index_at,
    is_symplectic_group,
    laurent_limit_at_zero,
    lower_projection,
    mat_add,
    mat_mul,
    position,
    rank,
    signed_indices,
    submatrix_rank,
    symplectic_form,
    transpose,
)
from src.linalg.scalars import Laurent, Ring, format_laurent, format_scalar
from tests.settings import SLOW_SETTINGS, STANDARD_SETTINGS

S = Laurent.variable()

small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def integer_matrices(draw, min_size=1, max_size=5):
    rows = draw(st.integers(min_value=min_size, max_value=max_size))
    cols = draw(st.integers(min_value=min_size, max_value=max_size))
    return [draw(st.lists(small_ints, min_size=cols, max_size=cols)) for _ in range(rows)]


laurents = st.dictionaries(st.integers(min_value=-3, max_value=3), small_ints, max_size=4).map(Laurent)


def test_laurent_arithmetic():
    assert (S + 1) * (S - 1) == S * S - 1
    assert S ** 3 == Laurent.monomial(1, 3)
    assert S ** -2 == Laurent.monomial(1, -2)
    assert 2 - S == Laurent({0: 2, 1: -1})
    assert (S + 1).evaluate(2) == 3
    assert (S * S - S + 1).valuation() == 0
    assert Laurent.monomial(Fraction(1, 2), -2).valuation() == -2


def test_laurent_constants_compare_with_rationals():
    assert Laurent.constant(3) == 3
    assert Laurent.constant(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(Laurent.constant(3)) == hash(Fraction(3))
    assert not Laurent()


def test_laurent_inverse():
    assert Laurent.monomial(2, -2).inverse() == Laurent.monomial(Fraction(1, 2), 2)
    with pytest.raises(NonInvertibleError):
        (S + 1).inverse()
    with pytest.raises(NonInvertibleError):
        Ring.RATIONAL.invert(0)


def test_evaluate_in_square():
    t = Laurent.variable()
    assert (3 * t * t + 1).evaluate_in_square(2) == 7
    assert (t ** -2).evaluate_in_square(-1) == -1
    with pytest.raises(ValueError):
        t.evaluate_in_square(4)


def test_format_laurent():
    assert format_laurent(S * S - S + 1) == "s^2-s+1"
    assert format_laurent(Laurent.monomial(Fraction(1, 2), -2)) == "1/2*s^-2"
    assert format_laurent(-S) == "-s"
    assert format_laurent(Laurent()) == "0"
    assert format_scalar(Fraction(-3, 4)) == "-3/4"


@given(laurents, laurents, laurents)
@STANDARD_SETTINGS
def test_laurent_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a - a == Laurent()


def test_ring_coercion():
    assert Ring.LAURENT.coerce(2) == Laurent.constant(2)
    assert Ring.RATIONAL.coerce(Laurent.constant(5)) == 5
    with pytest.raises(RingMismatchError):
        Ring.RATIONAL.coerce(S)


@given(integer_matrices())
@STANDARD_SETTINGS
def test_bareiss_matches_sympy(rows):
    expected = sympy.Matrix(rows).rank()
    assert bareiss_rank(rows) == expected
    assert gaussian_rank(rows) == expected


@given(integer_matrices(), st.integers(min_value=1, max_value=6))
@STANDARD_SETTINGS
def test_bareiss_with_fractions(rows, denominator):
    """Scaling rows by 1/d leaves the rank unchanged"""
    scaled = [[Fraction(v, denominator) for v in row] for row in rows]
    assert bareiss_rank(scaled) == bareiss_rank(rows)


@given(integer_matrices(min_size=8, max_size=8))
@SLOW_SETTINGS
def test_bareiss_matches_gaussian_on_8x8(rows):
    assert bareiss_rank(rows) == gaussian_rank(rows) == sympy.Matrix(rows).rank()


def test_low_rank_8x8():
    rows = [[i * (j + 2) + 1 for j in range(8)] for i in range(8)]
    assert bareiss_rank(rows) == gaussian_rank(rows) == 2


@given(integer_matrices())
@STANDARD_SETTINGS
def test_rank_of_transpose(rows):
    assert bareiss_rank([list(col) for col in zip(*rows)]) == bareiss_rank(rows)


def test_rank_examples():
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([]) == 0
    assert bareiss_rank([[0, 1], [1, 0]]) == 2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_signed_positions(n):
    labels = signed_indices(n)
    assert [position(i, n) for i in labels] == list(range(2 * n))
    assert [index_at(p, n) for p in range(2 * n)] == labels
    with pytest.raises(IndexError):
        position(0, n)


def test_indexed_matrix_basics():
    a = IndexedMatrix.from_entries(2, {(1, -1): 3, (-2, 1): Fraction(1, 2)})
    assert a[(1, -1)] == 3
    assert a.at(position(-2, 2), position(1, 2)) == Fraction(1, 2)
    assert IndexedMatrix.identity(2) @ a == a
    assert a.transpose().transpose() == a
    assert a.transpose()[(-1, 1)] == 3
    assert (a - a).is_zero()
    assert dict(a.nonzero_entries()) == {(1, -1): 3, (-2, 1): Fraction(1, 2)}


def test_lower_projection():
    a = IndexedMatrix.from_entries(1, {(1, -1): 1, (-1, 1): 2, (1, 1): 5})
    low = lower_projection(a)
    assert dict(low.nonzero_entries()) == {(-1, 1): 2}
    assert low.is_strictly_lower()


def test_mismatches_are_rejected():
    with pytest.raises(RankMismatchError):
        IndexedMatrix.identity(1) @ IndexedMatrix.identity(2)
    with pytest.raises(RingMismatchError):
        IndexedMatrix.identity(1) + IndexedMatrix.identity(1, Ring.LAURENT)


def test_rank_requires_rationals():
    assert rank(IndexedMatrix.identity(2)) == 4
    with pytest.raises(LaurentRankError):
        rank(IndexedMatrix.identity(2, Ring.LAURENT))
    with pytest.raises(LaurentRankError):
        submatrix_rank(IndexedMatrix.identity(1, Ring.LAURENT), 1, 1)


def test_submatrix_rank_of_identity():
    """Rows i..-1, columns 1..j of the n = 1 identity"""
    one = IndexedMatrix.identity(1)
    assert submatrix_rank(one, 1, 1) == 1
    assert submatrix_rank(one, 1, -1) == 2
    assert submatrix_rank(one, -1, 1) == 0
    assert submatrix_rank(one, -1, -1) == 1


def test_symplectic_form():
    j = symplectic_form(2)
    assert j[(1, -1)] == 1 and j[(-1, 1)] == -1
    assert j.transpose() == -j
    assert is_symplectic_group(IndexedMatrix.identity(2))
    assert not is_symplectic_group(IndexedMatrix.diagonal(1, {1: 2}))


def test_laurent_limit_at_zero():
    converging = IndexedMatrix.from_entries(1, {(-1, 1): S + 2, (1, 1): S * S}, Ring.LAURENT)
    limit = laurent_limit_at_zero(converging)
    assert limit.ring is Ring.RATIONAL
    assert dict(limit.nonzero_entries()) == {(-1, 1): 2}

    diverging = IndexedMatrix.from_entries(1, {(1, -1): S.inverse() + 1, (-1, 1): S}, Ring.LAURENT)
    with pytest.raises(NegativeExponentError) as err:
        laurent_limit_at_zero(diverging)
    assert err.value.position == (1, -1)
    assert err.value.exponent == -1


def test_functional_forms_of_the_operators():
    a = IndexedMatrix.from_entries(1, {(1, -1): 2, (-1, 1): 3})
    b = IndexedMatrix.from_entries(1, {(1, 1): 1, (-1, -1): -1})
    assert mat_mul(a, b) == a @ b
    assert dict(mat_mul(a, b).nonzero_entries()) == {(1, -1): -2, (-1, 1): 3}
    assert mat_add(a, b) == a + b
    assert transpose(a)[(1, -1)] == 3
