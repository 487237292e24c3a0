from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twin.linalg import (
    GF,
    QQ,
    DimensionError,
    FieldMismatchError,
    Matrix,
    SingularMatrixError,
    kernel_basis,
    mat_inverse,
    rank,
    solve,
)

small = st.integers(-5, 5)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


@pytest.mark.parametrize("field", [QQ, GF(2), GF(7)])
def test_identity_is_neutral(field):
    a = Matrix(field, [[1, 2], [3, 4]])
    i = Matrix.identity(field, 2)
    assert a @ i == a == i @ a


def test_fp_arithmetic_wraps():
    f = GF(5)
    assert f(3) + f(4) == f(2)
    assert f(2) * f(3) == f(1)
    assert f(3).inverse() == f(2)


def test_rejects_non_prime():
    with pytest.raises(ValueError):
        GF(6)


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        Matrix(QQ, [[1]]) @ Matrix(GF(3), [[1]])


def test_shape_mismatch():
    with pytest.raises(DimensionError):
        Matrix(QQ, [[1, 2]]) @ Matrix(QQ, [[1, 2]])


def test_singular_inverse():
    with pytest.raises(SingularMatrixError):
        mat_inverse(Matrix(QQ, [[1, 2], [2, 4]]))


@pytest.mark.parametrize("field", [QQ, GF(3)])
def test_format_parse_roundtrip(field):
    for x in [field(0), field(1), field(2), field(-1)]:
        assert field.parse(field.format(x)) == x
    assert field.from_json(field.to_json()) == field


def test_rational_format_is_canonical():
    assert QQ.format(QQ(Fraction(-6, 4))) == "-3/2"
    assert QQ.format(QQ(2)) == "2"


@given(square(3))
def test_inverse_property(rows):
    a = Matrix(QQ, rows)
    if rank(a) < 3:
        with pytest.raises(SingularMatrixError):
            mat_inverse(a)
    else:
        assert (a @ mat_inverse(a)).is_identity()


@given(square(3), st.sampled_from([2, 3, 5]))
def test_rank_nullity(rows, p):
    a = Matrix(GF(p), rows)
    ker = kernel_basis(a)
    assert rank(a) + len(ker) == 3
    for v in ker:
        assert all(x == 0 for x in a.apply(v))


@given(square(3), st.lists(small, min_size=3, max_size=3))
def test_solve_consistent(rows, x):
    a = Matrix(QQ, rows)
    b = Matrix(QQ, [[v] for v in a.apply(x)])
    sol = solve(a, b)
    assert sol is not None
    assert a @ sol == b
