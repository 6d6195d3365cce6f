import pytest

from qfh.exactalg import LaurentQ, RationalQ, q
from qfh.linalg import Inconsistent, Underdetermined, det, inverse, sparse_solve


def test_det_and_inverse():
    mat = [[q, 1], [1, q]]
    assert det(mat) == RationalQ(q * q - 1)
    inv = inverse(mat)
    prod = [[sum((RationalQ(mat[i][k]) * inv[k][j] for k in range(2)), RationalQ(0))
             for j in range(2)] for i in range(2)]
    assert prod == [[RationalQ(1), RationalQ(0)], [RationalQ(0), RationalQ(1)]]


def test_singular_inverse():
    with pytest.raises(ZeroDivisionError):
        inverse([[1, q], [1, q]])


def test_sparse_solve_multiple_right_hand_sides():
    # x + y = a, q x - y = b for two right-hand sides a=(1,0), b=(0,1)
    rows = [{"x": 1, "y": 1}, {"x": q, "y": -1}]
    rhs = [{"a": 1}, {"b": 1}]
    sol = sparse_solve(rows, rhs, ["x", "y"])
    inv = RationalQ(1, q + 1)
    assert sol["x"] == {"a": inv, "b": inv}
    assert sol["y"] == {"a": RationalQ(q, q + 1), "b": -inv}


def test_sparse_solve_errors():
    with pytest.raises(Underdetermined):
        sparse_solve([{"x": 1, "y": 1}], [{}], ["x", "y"])
    with pytest.raises(Inconsistent):
        sparse_solve([{"x": 1}, {"x": 1}], [{"k": 1}, {"k": 2}], ["x"])
