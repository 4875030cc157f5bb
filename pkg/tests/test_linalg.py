from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sl2hc.linalg import (
    char_poly,
    clear_denominators,
    divide_out_root,
    identity,
    jordan_block_sizes,
    mat_mul,
    mat_sub_scalar,
    rank,
    root_multiplicity,
)


def test_identity_and_mat_mul():
    i2 = identity(2)
    a = [[1, 2], [3, 4]]
    assert mat_mul(a, i2) == a
    assert mat_mul(i2, a) == a
    assert mat_mul(a, a) == [[7, 10], [15, 22]]


def test_mat_sub_scalar():
    assert mat_sub_scalar([[5, 1], [0, 5]], 5) == [[0, 1], [0, 0]]


def test_clear_denominators():
    a = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1), Fraction(-2, 3)]]
    scaled, s = clear_denominators(a)
    assert s == 6
    assert scaled == [[3, 2], [6, -4]]
    _, s2 = clear_denominators(a, extra=(Fraction(1, 4),))
    assert s2 == 12


def test_rank_known_cases():
    assert rank(identity(3)) == 3
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[2, 0, 1], [0, 1, 0], [2, 1, 1]]) == 2


def test_char_poly_known_cases():
    assert char_poly([[2, 0], [0, 3]]) == [1, -5, 6]
    assert char_poly([[0, 1], [0, 0]]) == [1, 0, 0]
    # companion matrix of t^3 - 2t - 5
    c = [[0, 0, 5], [1, 0, 2], [0, 1, 0]]
    assert char_poly(c) == [1, 0, -2, -5]
    assert char_poly([]) == [1]


@given(st.lists(st.lists(st.integers(min_value=-5, max_value=5), min_size=3, max_size=3), min_size=3, max_size=3))
@settings(max_examples=60)
def test_cayley_hamilton(rows):
    poly = char_poly(rows)
    n = 3
    acc = [[0] * n for _ in range(n)]
    power = identity(n)
    for coeff in reversed(poly):
        acc = [[acc[i][j] + coeff * power[i][j] for j in range(n)] for i in range(n)]
        power = mat_mul(power, rows)
    assert acc == [[0] * n for _ in range(n)]


def test_divide_out_root():
    # (t - 1)^2 (t - 2) = t^3 - 4t^2 + 5t - 2
    poly = [1, -4, 5, -2]
    assert divide_out_root(poly, 1) == ([1, -3, 2], 0)
    assert divide_out_root(poly, 3) == ([1, -1, 2], 4)
    assert root_multiplicity(poly, 1) == (2, [1, -2])
    assert root_multiplicity(poly, 2) == (1, [1, -2, 1])
    assert root_multiplicity(poly, 7) == (0, poly)


def test_jordan_block_sizes():
    nilp = [[0, 1], [0, 0]]
    assert jordan_block_sizes(nilp, 0, 2) == (2,)
    diag = [[4, 0], [0, 4]]
    assert jordan_block_sizes(diag, 4, 2) == (1, 1)
    j21 = [[3, 1, 0], [0, 3, 0], [0, 0, 3]]
    assert jordan_block_sizes(j21, 3, 3) == (2, 1)
    mixed = [[3, 1, 0], [0, 3, 0], [0, 0, 9]]
    assert jordan_block_sizes(mixed, 3, 2) == (2,)
    assert jordan_block_sizes(mixed, 9, 1) == (1,)


def test_jordan_block_sizes_sum_check():
    with pytest.raises(AssertionError):
        jordan_block_sizes([[1, 0], [0, 2]], 1, 2)


@given(st.lists(st.lists(st.integers(min_value=-4, max_value=4), min_size=2, max_size=2), min_size=2, max_size=2))
@settings(max_examples=60)
def test_char_poly_trace_det(rows):
    poly = char_poly(rows)
    assert poly[1] == -(rows[0][0] + rows[1][1])
    assert poly[2] == rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
