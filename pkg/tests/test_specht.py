import itertools
import math

import pytest

from qfh import specht
from qfh.combinat import Partition, partitions, q_contents
from qfh.exactalg import LaurentQ, RationalQ, q, qnumber
from qfh.fhq import psi_inverse
from qfh.hecke import generator
from qfh.specht import (NotScalarMatrix, blocks, central_character, central_character_seminormal,
                        character_table, jm_eigenvalues, seminormal_rep)
from qfh.symfunc import evaluate
from qfh.symmgroup import reduced_cycle_types
from qfh.verify import check_block_contents

P = Partition
QI = LaurentQ.monomial(-1)


@pytest.mark.parametrize("n", range(2, 6))
def test_one_dimensional_reps(n):
    triv, sign = seminormal_rep(P([n])), seminormal_rep(P([1] * n))
    assert triv.dim == sign.dim == 1
    assert all(g[0, 0] == RationalQ(q) for g in triv.generators)
    assert all(g[0, 0] == RationalQ(-1) for g in sign.generators)
    for i in range(1, n + 1):
        assert triv.jm_matrix(i)[0, 0] == RationalQ(qnumber(i - 1))
        assert sign.jm_matrix(i)[0, 0] == RationalQ(qnumber(1 - i))


def test_two_dimensional_rep():
    rep = seminormal_rep(P([2, 1]))
    t1, t2 = rep.generators
    assert (t1.dot(t2).dot(t1) == t2.dot(t1).dot(t2)).all()
    l3 = rep.jm_matrix(3)
    assert sorted(map(str, (l3[0, 0], l3[1, 1]))) == sorted(map(str, (RationalQ(qnumber(1)),
                                                                      RationalQ(qnumber(-1)))))


@pytest.mark.parametrize("n", range(1, 6))
def test_relations_and_jm_diagonal(n):
    for lam in partitions(n):
        rep = seminormal_rep(lam)
        rep.check_relations()
        rep.check_jm()


def test_central_character_examples():
    assert central_character(P([2, 1]), P()) == 1
    # Gamma_(1) = T_1 in H_2 acts by the two roots of the quadratic relation
    assert central_character(P([2]), P([1])) == q
    assert central_character(P([1, 1]), P([1])) == -1
    assert character_table(2, P([1])) == {P([2]): q, P([1, 1]): LaurentQ(-1)}
    assert set(character_table(3, P()).values()) == {LaurentQ(1)}


def test_character_table_from_f2():
    table = character_table(3, P([2]))
    f2 = psi_inverse(P([2]))
    assert table[P([3])] == evaluate(f2, [q * c for c in q_contents(P([3]))], 3) == q ** 3 + q ** 2
    # the unscaled q-contents {0, 1, 1 + q} do not give the action of Gamma_(2)
    assert evaluate(f2, list(q_contents(P([3]))), 3) != table[P([3])]


@pytest.mark.parametrize("n", range(1, 5))
def test_two_routes_agree(n):
    for lam in partitions(n):
        for mu in reduced_cycle_types(n):
            assert central_character(lam, mu, check=False) == central_character_seminormal(lam, mu)


def test_not_scalar_detected(monkeypatch):
    monkeypatch.setattr(specht, "gamma", lambda n, mu: generator(1, n))
    with pytest.raises(NotScalarMatrix):
        central_character_seminormal(P([2, 1]), P([1]))


def test_invalid_mu():
    with pytest.raises(ValueError):
        central_character(P([2]), P([1, 1]))


@pytest.mark.parametrize("n", range(1, 6))
def test_central_characters_separate_shapes(n):
    vectors = {lam: tuple(central_character(lam, mu, check=False) for mu in reduced_cycle_types(n))
               for lam in partitions(n)}
    assert len(set(vectors.values())) == len(vectors)


def test_jm_eigenvalues():
    assert jm_eigenvalues(P([2])) == [LaurentQ(0), q]


def test_block_examples():
    assert blocks(3, 2).classes == ((P([3]), P([1, 1, 1])), (P([2, 1]),))
    assert blocks(2, 2).classes == ((P([2]), P([1, 1])),)
    assert all(len(c) == 1 for c in blocks(3, 4).classes)
    assert all(len(c) == 1 for c in blocks(5, math.inf).classes)
    assert blocks(3, math.inf).to_json()["e"] == "inf"
    with pytest.raises(ValueError):
        blocks(3, 1)


def test_blocks_match_residues():
    ok, detail = check_block_contents(8, (2, 3, 4, 5))
    assert ok, detail
