import itertools

import pytest

from qfh.combinat import Partition, partitions, partitions_up_to
from qfh.exactalg import IVLPoly, LaurentQ, q
from qfh.fhq import (FHElem, FHqElem, K, classical_phi_n, classical_structure_constants, fhq_mul,
                     n_matrix, phi_nq, psi, psi_inverse, structure_constants, theta)
from qfh.errors import SizeGuard
from qfh.hecke import HeckeElem, gamma, specialize_q1
from qfh.symfunc import EPolyElem, e, e_to_m, m, m_to_e
from qfh.symmgroup import classical_jm, ga_add, ga_mul
from qfh.verify import check_filtration, expected_f, k1_square_table, psi_e1_squared_report

P = Partition
QI = LaurentQ.monomial(-1)


def test_structure_constants_gamma1_squared():
    assert structure_constants(P([1]), P([1])) == k1_square_table()


def test_unit_and_symmetry():
    assert structure_constants(P(), P([2])) == {P([2]): IVLPoly(1)}
    assert structure_constants(P([2]), P([1])) == structure_constants(P([1]), P([2]))


def test_q1_specialization():
    table = structure_constants(P([1]), P([1]))
    assert dict(theta(FHqElem(table)).items()) == {P([1, 1]): IVLPoly(2), P([2]): IVLPoly(3),
                                                    P(): IVLPoly({2: 1})}


def test_guard():
    with pytest.raises(SizeGuard):
        structure_constants(P([3]), P([2]))


def test_fhq_mul_examples():
    x = K([1]) + K([2], q)
    assert K(()) * x == x
    assert fhq_mul(K([1]), K([1])) == FHqElem(k1_square_table())
    k1 = K([1])
    assert (k1 * k1) * k1 == k1 * (k1 * k1)


def test_commutative():
    for a, b in itertools.combinations(partitions_up_to(2), 2):
        assert K(a) * K(b) == K(b) * K(a)


def test_phi_nq_examples():
    assert phi_nq(K([1]), 3) == gamma(3, P([1]))
    assert phi_nq(K([1, 1]), 3) == HeckeElem(3)
    g = gamma(4, P([1]))
    assert phi_nq(K([1]) * K([1]), 4) == g * g


@pytest.mark.parametrize("n", range(1, 7))
def test_phi_nq_is_multiplicative(n):
    for mu, nu in itertools.combinations_with_replacement(partitions_up_to(4), 2):
        if mu.size + nu.size <= 4:
            assert phi_nq(K(mu) * K(nu), n) == gamma(n, mu) * gamma(n, nu)


def test_theta_examples_and_square():
    assert theta(K([1]) * K([1])) == FHElem({(1, 1): 2, (2,): 3, (): IVLPoly({2: 1})})
    assert theta(K([3, 1])) == FHElem({(3, 1): 1})
    x = K([1]) * K([2])
    assert classical_phi_n(theta(x), 5) == specialize_q1(phi_nq(x, 5))


@pytest.mark.parametrize("n", range(1, 7))
def test_commuting_square_on_generators(n):
    for mu in partitions_up_to(3):
        assert classical_phi_n(theta(K(mu)), n) == specialize_q1(phi_nq(K(mu), n))


def test_classical_constants_agree_with_theta():
    for mu, nu in itertools.combinations_with_replacement(partitions_up_to(2), 2):
        assert theta(K(mu) * K(nu)) == FHElem(classical_structure_constants(mu, nu))


@pytest.mark.parametrize("r", range(1, 4))
def test_classical_jucys(r):
    for n in range(1, 7):
        ls = [classical_jm(i, n) for i in range(1, n + 1)]
        er = {}
        for combo in itertools.combinations(ls, r):
            term = combo[0]
            for x in combo[1:]:
                term = ga_mul(term, x)
            er = ga_add(er, term)
        assert classical_phi_n(theta(psi(e(r))), n) == er


def test_psi_examples():
    assert psi(e(1)) == K([1])
    assert psi(e(2)) == K([1, 1]) + K([2])
    assert psi(e(1) * e(1)) == FHqElem(k1_square_table())
    assert psi_e1_squared_report()["matches"] == ["q + 1 + q^-1"]


def test_psi_inverse_examples():
    for mu, f in expected_f().items():
        assert m_to_e(psi_inverse(mu)) == f
        assert psi(psi_inverse(mu)) == K(mu)
    assert psi_inverse(P()) == m(())


@pytest.mark.parametrize("r", range(1, 5))
def test_sum_of_f_mu_is_e_r(r):
    total = sum((psi_inverse(mu) for mu in partitions(r)), m((), 0))
    assert total == e(r)


def test_n_matrix_small():
    m1 = n_matrix(1)
    assert m1.entries == ((LaurentQ(1),),)
    m2 = n_matrix(2)
    assert m2.basis == (P([1, 1]), P([2]))
    assert m2.column(P([1, 1])) == {P([1, 1]): LaurentQ(1), P([2]): LaurentQ(1)}
    assert m2.column(P([2])) == {P([1, 1]): q - 2 + QI, P([2]): q - 1 + QI}
    assert m2.determinant.is_unit()


def test_filtration():
    ok, detail = check_filtration(3)
    assert ok, detail


def test_json_round_trip():
    x = K([1]) * K([1])
    assert FHqElem.from_json(x.to_json()) == x
