import itertools

import pytest
from hypothesis import given, strategies as st

from qfh.combinat import (Partition, StandardTableau, content_polynomial, contents, contents_mod_e,
                          e_core, num_standard_tableaux, partitions, partitions_up_to, q_contents,
                          removable_border_strips, standard_tableaux)
from qfh.errors import SizeGuard
from qfh.exactalg import q, qnumber

P = Partition


def _random_partition(draw_parts):
    return Partition(sorted(draw_parts, reverse=True))


partition_st = st.lists(st.integers(1, 6), max_size=5).map(_random_partition)


def test_partition_parsing_and_validation():
    assert Partition.parse("3,1") == P([3, 1])
    assert Partition.parse("") == P()
    assert P([2, 1, 0]) == P([2, 1])
    with pytest.raises(ValueError):
        P([1, 2])
    assert str(P([1, 1])) == "(1,1)" and str(P()) == "()"
    assert P([3, 1]).support_rank == 6


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (4, 5), (8, 22), (10, 42)])
def test_partition_counts(n, count):
    parts = list(partitions(n))
    assert len(parts) == count == len(set(parts))


def test_partitions_up_to():
    assert partitions_up_to(2) == [P(), P([1]), P([2]), P([1, 1])]
    assert len(partitions_up_to(4)) == 12


@given(partition_st)
def test_conjugate_is_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


def test_contents():
    assert contents(P([4, 2, 1])) == (-2, -1, 0, 0, 1, 2, 3)
    assert q_contents(P([2])) == (qnumber(0), qnumber(1))
    assert contents_mod_e(P([2, 1]), 2) == (0, 1, 1)


def test_content_polynomial_roots():
    poly = content_polynomial(P([2, 1]))
    assert poly.degree() == 3


def test_border_strips_and_core_example():
    lam = P([5, 3, 2])
    strips = removable_border_strips(lam, 4)
    assert strips and all(len(s) == 4 for s in strips)
    for s in strips:
        s.remove_from(lam)  # each removal leaves a partition
    assert e_core(lam, 4) == P([1, 1])


def _all_cores(lam, e):
    """Every e-core reachable by any order of strip removals."""
    strips = removable_border_strips(lam, e)
    if not strips:
        return {lam}
    return set().union(*(_all_cores(s.remove_from(lam), e) for s in strips))


def test_core_order_independence_exhaustive_small():
    for n in range(0, 9):
        for lam in partitions(n):
            for e in range(2, 5):
                assert _all_cores(lam, e) == {e_core(lam, e)}


def test_core_of_large_e_is_identity():
    lam = P([3, 2])
    assert e_core(lam, 10) == lam


def test_tableaux():
    tabs = standard_tableaux(P([2, 1]))
    assert len(tabs) == 2 == num_standard_tableaux(P([2, 1]))
    assert [t.column_word() for t in tabs] == sorted(t.column_word() for t in tabs)
    t = tabs[0]
    assert t.swap(2, 3) in tabs
    assert num_standard_tableaux(P([3, 2, 1])) == 16 == len(standard_tableaux(P([3, 2, 1])))
    with pytest.raises(ValueError):
        StandardTableau(P([2]), ((2, 1),))


def test_tableau_guard():
    with pytest.raises(SizeGuard):
        standard_tableaux(P([11]))
