import itertools
from math import factorial

import pytest
from hypothesis import given, strategies as st

from qfh.combinat import Partition, partitions
from qfh.symmgroup import (Permutation, all_permutations, class_elements, class_size, class_sum,
                           classical_jm, cycle_type, from_word, ga_add, ga_mul, length,
                           minimal_length_class_reps, minimal_rep, reduced_cycle_type,
                           reduced_cycle_types, reduced_word)

P = Partition
perm_st = st.integers(1, 6).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


@given(perm_st)
def test_reduced_word_round_trip(w):
    word = reduced_word(w)
    assert len(word) == length(w)
    assert from_word(word, len(w)) == w


@given(perm_st)
def test_inverse(w):
    assert w * w.inverse() == Permutation.identity(len(w))
    assert length(w.inverse()) == length(w)


def test_composition_convention():
    s1, s2 = Permutation.simple(1, 3), Permutation.simple(2, 3)
    w = s1 * s2
    assert w(3) == s1(s2(3))
    assert from_word([1, 2], 3) == w


def test_cycles():
    w = Permutation.from_cycles("(1 2 3)(4 5)", 6)
    assert cycle_type(w) == P([3, 2, 1])
    assert reduced_cycle_type(w) == P([2, 1])
    assert w.cycle_string() == "(1 2 3)(4 5)"


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes(n):
    types = reduced_cycle_types(n)
    assert sum(class_size(n, mu) for mu in types) == factorial(n)
    for mu in types:
        assert len(class_elements(n, mu)) == class_size(n, mu)


@pytest.mark.parametrize("n", range(1, 6))
def test_minimal_representatives(n):
    for mu in reduced_cycle_types(n):
        reps = minimal_length_class_reps(n, mu)
        assert {length(w) for w in reps} == {mu.size}
        assert minimal_rep(n, mu) in reps


def test_minimal_reps_of_11_in_s4():
    assert minimal_length_class_reps(4, P([1, 1])) == [Permutation.from_cycles("(1 2)(3 4)", 4)]


def test_classical_jucys_murphy():
    # e_r(L_1..L_n) = sum of X_mu over mu |- r, for r = 1, 2 and n = 4
    n = 4
    ls = [classical_jm(i, n) for i in range(1, n + 1)]
    e1 = {}
    for x in ls:
        e1 = ga_add(e1, x)
    assert e1 == class_sum(n, P([1]))
    e2 = {}
    for a, b in itertools.combinations(ls, 2):
        e2 = ga_add(e2, ga_mul(a, b))
    assert e2 == ga_add(class_sum(n, P([2])), class_sum(n, P([1, 1])))
