import itertools

import pytest
from hypothesis import given, strategies as st

from qfh.combinat import Partition, partitions, partitions_up_to
from qfh.exactalg import IVLPoly, LaurentQ, q
from qfh.symfunc import (EPolyElem, SymFuncElem, e, e_to_m, elementary_values, evaluate, m,
                         m_to_e, monomial_mul, monomial_mul_expand, one)

P = Partition
small = st.lists(st.integers(-3, 3).map(LaurentQ), min_size=0, max_size=6)


def test_monomial_products():
    assert m([1]) * m([1]) == m([1, 1], 2) + m([2])
    assert one() * m([2, 1]) == m([2, 1])
    assert e(1) * e(1) == e_to_m(EPolyElem({(1, 1): 1}))


def test_combinatorial_rule_matches_expansion():
    for a, b in itertools.combinations_with_replacement(partitions_up_to(3), 2):
        assert monomial_mul(m(a), m(b)) == monomial_mul_expand(m(a), m(b))


def test_e_to_m_examples():
    assert e_to_m(EPolyElem({(2,): 1})) == m([1, 1])
    assert e_to_m(EPolyElem({(1, 1): 1})) == m([1, 1], 2) + m([2])
    assert e_to_m(EPolyElem({(2, 1): 1})) == m([1, 1, 1], 3) + m([2, 1])


def test_m_to_e_examples():
    assert m_to_e(m([1, 1])) == EPolyElem({(2,): 1})
    assert m_to_e(m([2])) == EPolyElem({(1, 1): 1, (2,): -2})
    assert m_to_e(m([1])) == EPolyElem({(1,): 1})
    assert str(m_to_e(m([2]))) == "e(1,1) - 2*e(2)"


@pytest.mark.parametrize("k", range(0, 6))
def test_round_trip(k):
    for lam in partitions(k):
        f = m(lam, IVLPoly({1: q}))
        assert e_to_m(m_to_e(f)) == f


@given(small, st.integers(-3, 3))
def test_generating_function(values, x):
    # sum_r e_r(values) x^r = prod (1 + v x)
    ev = elementary_values(values, len(values))
    lhs = sum((ev[r] * x ** r for r in range(len(values) + 1)), LaurentQ())
    rhs = LaurentQ(1)
    for v in values:
        rhs = rhs * (v * x + 1)
    assert lhs == rhs


def test_evaluate_examples():
    zero_one = [LaurentQ(0), LaurentQ(1)]
    assert evaluate(e(1), zero_one, 5) == 1
    assert evaluate(e(3), zero_one, 2) == 0
    assert evaluate(m([2]), [LaurentQ(1), q], 0) == 1 + q * q


@given(small, st.randoms(use_true_random=False))
def test_evaluate_symmetric(values, rnd):
    shuffled = list(values)
    rnd.shuffle(shuffled)
    f = m([2, 1]) + e(2) + m([1], IVLPoly({1: q}))
    assert evaluate(f, values, 3) == evaluate(f, shuffled, 3)


@given(small)
def test_evaluate_multiplicative(values):
    basis = [m(lam) for lam in partitions_up_to(2)]
    for f, g in itertools.combinations_with_replacement(basis, 2):
        assert evaluate(f * g, values, 4) == evaluate(f, values, 4) * evaluate(g, values, 4)


def test_evaluate_e_basis_agrees():
    f = m([2, 1]) + m([1], IVLPoly({1: 1}))
    vals = [LaurentQ(2), q, LaurentQ(-1)]
    assert evaluate(f, vals, 3) == evaluate(m_to_e(f), vals, 3)


def test_json_and_degree():
    f = m([2], q) + m([1, 1], IVLPoly({2: 1}))
    assert SymFuncElem.from_json(f.to_json()) == f
    assert f.degree() == 2
    g = m_to_e(f)
    assert EPolyElem.from_json(g.to_json()) == g
