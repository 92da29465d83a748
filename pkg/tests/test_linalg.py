from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ybekit import SingularMatrix, exact, identity, invert, kernel_basis, scalar_str
from ybekit.linalg import in_span, is_zero_vec, mat_mul, mat_vec, rank, transpose


def test_exact_collapses_integral_fractions():
    assert exact(Fraction(4, 2)) == 2
    assert isinstance(exact(Fraction(4, 2)), int)
    assert exact(Fraction(1, 2)) == Fraction(1, 2)
    assert exact(7) == 7


def test_scalar_str():
    assert scalar_str(3) == "3"
    assert scalar_str(Fraction(-3, 5)) == "-3/5"
    assert scalar_str(Fraction(6, 2)) == "3"


def test_kernel_of_identity_is_empty():
    assert kernel_basis(identity(2)) == []


def test_kernel_of_zero_is_full():
    basis = kernel_basis(((0, 0), (0, 0)))
    assert len(basis) == 2


def test_kernel_rank_one():
    # by hand: x + y = 0 twice, so the kernel is spanned by (1, -1)
    basis = kernel_basis(((1, 1), (1, 1)))
    assert len(basis) == 1
    x, y = basis[0]
    assert x == -y != 0


def test_invert_examples():
    assert invert(identity(3)) == identity(3)
    assert invert(((2, 0), (0, 3))) == ((Fraction(1, 2), 0), (0, Fraction(1, 3)))
    assert invert(((1, 1), (0, 1))) == ((1, -1), (0, 1))


def test_invert_singular_raises():
    with pytest.raises(SingularMatrix):
        invert(((1, 2), (2, 4)))


small = st.integers(min_value=-4, max_value=4)


@st.composite
def matrices(draw, max_dim=4):
    rows = draw(st.integers(min_value=1, max_value=max_dim))
    cols = draw(st.integers(min_value=1, max_value=max_dim))
    return tuple(tuple(draw(small) for _ in range(cols)) for _ in range(rows))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_vectors_are_annihilated(m):
    for v in kernel_basis(m):
        assert is_zero_vec(mat_vec(m, v))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + len(kernel_basis(m)) == len(m[0])


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.data())
def test_invert_left_inverse(n, data):
    m = tuple(tuple(data.draw(small) for _ in range(n)) for _ in range(n))
    try:
        inv = invert(m)
    except SingularMatrix:
        assert rank(m) < n
        return
    assert mat_mul(inv, m) == identity(n)
    assert mat_mul(m, inv) == identity(n)


def test_in_span():
    basis = [(1, 0, 1), (0, 1, 0)]
    assert in_span(basis, (2, 3, 2))
    assert not in_span(basis, (1, 0, 0))
    assert in_span([], (0, 0))


def test_transpose_involution():
    m = ((1, 2, 3), (4, 5, 6))
    assert transpose(transpose(m)) == m
