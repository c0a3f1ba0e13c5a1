from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from flagorbits.exactla import (GF, QQ, FieldMismatchError, MatSpace, Matrix, ShapeError,
                                intersect, matrix_from_json, matrix_to_json, nullspace, rref,
                                solve_linear, span)

small = st.integers(-4, 4)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def test_identity_and_products():
    I = Matrix.identity(3)
    A = Matrix.from_rows([[1, 2, 0], [0, 1, 3], [4, 0, 1]])
    assert I @ A == A == A @ I
    assert A.det() == 25
    assert A @ A.inverse() == I


def test_rationals_stay_exact():
    A = Matrix.from_rows([[2, 1], [1, 1]]).scale(Fraction(1, 3))
    assert A.inverse() == Matrix.from_rows([[3, -3], [-3, 6]])


def test_singular_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        Matrix.from_rows([[1, 2], [2, 4]]).inverse()


def test_gf_arithmetic():
    F = GF(7)
    A = Matrix.from_rows([[3, 5], [1, 6]], F)
    assert (A @ A.inverse()) == Matrix.identity(2, F)
    assert F.inv(3) == 5
    with pytest.raises(ValueError):
        GF(9)


def test_field_mixing_rejected():
    with pytest.raises(FieldMismatchError):
        Matrix.identity(2) + Matrix.identity(2, GF(5))


def test_shape_errors():
    with pytest.raises(ShapeError):
        Matrix.identity(2) @ Matrix.identity(3)


def test_delta_is_antidiagonal_transpose():
    A = Matrix.from_rows([[1, 2], [3, 4]])
    # entry (i, j) of delta(A) is A[n-1-j, n-1-i]
    assert A.delta() == Matrix.from_rows([[4, 2], [3, 1]])


@given(square(3), square(3))
def test_delta_reverses_products(a, b):
    A, B = Matrix.from_rows(a), Matrix.from_rows(b)
    assert (A @ B).delta() == B.delta() @ A.delta()


@given(square(3), square(3))
def test_det_multiplicative(a, b):
    A, B = Matrix.from_rows(a), Matrix.from_rows(b)
    assert (A @ B).det() == A.det() * B.det()


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=4))
def test_rank_nullity(rows):
    m = Matrix.from_rows(rows)
    ns = nullspace(m)
    assert m.rank() + ns.dim == 4
    for b in ns.basis:
        assert (m @ b).is_zero()


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=3))
def test_rref_idempotent(rows):
    m = Matrix.from_rows(rows)
    red, rank = rref(m)
    assert rref(red) == (red, rank)
    assert rank == m.rank()


def test_solve_linear_without_equations_is_everything():
    assert len(solve_linear([], 3)) == 3


def _vecs(data):
    return [Matrix(3, 1, tuple(QQ(x) for x in v), QQ) for v in data]


vec3 = st.lists(st.lists(small, min_size=3, max_size=3), max_size=3)


@given(vec3, vec3)
def test_intersection_dimension_formula(a, b):
    A, B = span(_vecs(a), (3, 1)), span(_vecs(b), (3, 1))
    C = intersect(A, B)
    assert C.dim == A.dim + B.dim - (A + B).dim
    assert A.contains_space(C) and B.contains_space(C)


def test_span_is_canonical():
    e1, e2 = _vecs([[1, 0, 0], [0, 1, 0]])
    assert span([e1, e2], (3, 1)) == span([e1 + e2, e1 - e2], (3, 1))


def test_dependent_basis_rejected():
    e1, = _vecs([[1, 0, 0]])
    with pytest.raises(ValueError):
        MatSpace((3, 1), (e1, e1.scale(2)))


def test_json_round_trip():
    m = Matrix.from_rows([[Fraction(1, 2), 3], [-2, Fraction(-7, 3)]])
    data = matrix_to_json(m)
    assert data == [["1/2", "3"], ["-2", "-7/3"]]
    assert matrix_from_json(data) == m
    f = Matrix.from_rows([[1, 2]], GF(5))
    assert matrix_from_json(matrix_to_json(f), GF(5)) == f


@pytest.mark.parametrize("bad", ["3/1", "2/4", "01", "1/-2", "+1", "1.5"])
def test_json_rejects_noncanonical(bad):
    with pytest.raises(ValueError):
        matrix_from_json([[bad]])
