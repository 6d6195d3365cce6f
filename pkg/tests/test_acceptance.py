"""
Acceptance criteria, one test each. Every test starts from cold in-memory
caches with the disk cache disabled, times itself against its budget and
records a PASS/FAIL line that is printed in the terminal summary.
"""

import itertools
import math
import time
from functools import lru_cache

import pytest

from qfh import cache
from qfh.combinat import (Partition, contents_mod_e, e_core, partitions, partitions_up_to,
                          q_contents, removable_border_strips)
from qfh.exactalg import IVLPoly, LaurentQ, q
from qfh.fhq import K, n_matrix, psi, psi_inverse, structure_constants
from qfh.hecke import (HeckeElem, T, ev_n, gamma, gamma_expand, geck_rouquier_basis, identity, mul)
from qfh.specht import blocks, central_character, central_character_seminormal
from qfh.symfunc import e, evaluate, m_to_e
from qfh.symmgroup import Permutation, reduced_cycle_types
from qfh.verify import (expected_f, gamma1_squared_expected, k1_square_table, properties_suite,
                        psi_e1_squared_report)

P = Partition
QI = LaurentQ.monomial(-1)


@pytest.fixture
def criterion(request):
    """Run a criterion body cold, check its budget and record the outcome line."""
    cache.clear_memory()
    lines = request.config.__dict__.setdefault("_acceptance_lines", [])

    def run(label, budget, body):
        start = time.perf_counter()
        try:
            detail = body()
            ok = True
        except AssertionError as exc:
            detail, ok = f"assertion failed: {str(exc).splitlines()[0]}", False
        elapsed = time.perf_counter() - start
        in_time = elapsed < budget
        status = "PASS" if ok and in_time else "FAIL"
        lines.append(f"{status}  {label}  ({elapsed:.1f}s, budget {budget:g}s)"
                     + (f"  {detail}" if detail else ""))
        assert ok, detail
        assert in_time, f"{elapsed:.1f}s exceeds the {budget}s budget"
    return run


def test_c01_h3_basis(criterion):
    def body():
        p = lambda s: Permutation.from_cycles(s, 3)
        basis = geck_rouquier_basis(3)
        assert basis[P()] == identity(3)
        assert basis[P([1])] == T(p("(1 2)")) + T(p("(2 3)")) + T(p("(1 3)")).scale(QI)
        assert basis[P([2])] == T(p("(1 2 3)")) + T(p("(1 3 2)")) + T(p("(1 3)")).scale((q - 1) * QI)
        assert len(basis) == 3
    criterion("1 H_3 Geck-Rouquier basis", 1, body)


def test_c02_gamma1_squared_direct(criterion):
    def body():
        for n in range(2, 7):
            g = gamma(n, P([1]))
            got = gamma_expand(mul(g, g))
            assert got == gamma1_squared_expected(n), f"n={n}: {got}"
        return "n=2..6"
    criterion("2 Gamma_(1)^2 by direct multiplication", 30, body)


def test_c03_structure_constants(criterion):
    def body():
        table = structure_constants(P([1]), P([1]))
        assert table == k1_square_table(), table
        at1 = {lam: c.at_q1() for lam, c in table.items() if c.at_q1()}
        assert at1 == {P([1, 1]): IVLPoly(2), P([2]): IVLPoly(3), P(): IVLPoly({2: 1})}
    criterion("3 structure constants (1)x(1) and q=1", 60, body)


def test_c04_ev_elementary(criterion):
    def body():
        for n in range(1, 7):
            for r in range(0, 4):
                want = sum((gamma(n, mu) for mu in partitions(r)), HeckeElem(n))
                assert ev_n(e(r), n) == want, f"r={r}, n={n}"
        return "r<=3, n<=6 (JM elements scaled by q)"
    criterion("4 ev_n(e_r) = sum of Gamma_mu", 120, body)


def test_c05_f_mu(criterion):
    def body():
        for mu, f in expected_f().items():
            got = psi_inverse(mu)
            assert m_to_e(got) == f, f"f_{mu} = {m_to_e(got)}"
            assert psi(got) == K(mu)
        report = psi_e1_squared_report()
        assert report["matches"] == ["q + 1 + q^-1"], report
        return f"Psi(e_1^2) has K_(2)-coefficient {report['computed']}"
    criterion("5 f_(1), f_(2), f_(1,1) and round trip", 60, body)


def test_c06_n_matrix(criterion):
    def body():
        dets = []
        for k in range(1, 5):
            mat = n_matrix(k)  # raises on a t-dependent entry or a non-unit determinant
            assert mat.determinant.is_unit()
            assert all(isinstance(x, LaurentQ) for row in mat.entries for x in row)
            dets.append(str(mat.determinant))
        return "determinants " + ", ".join(dets)
    criterion("6 N^(k) Laurent entries with unit determinant, k<=4", 300, body)


def test_c07_filtration(criterion):
    def body():
        pairs = 0
        for mu, nu in itertools.combinations_with_replacement(partitions_up_to(4), 2):
            k = mu.size + nu.size
            if k > 4:
                continue
            pairs += 1
            table = structure_constants(mu, nu)
            for lam, c in table.items():
                assert lam.size <= k, f"{mu}x{nu} reaches {lam}"
                if lam.size == k:
                    assert c.degree() in (None, 0), f"{mu}x{nu}: {lam} coefficient {c}"
            # top layer read straight from Hecke products wherever it survives at n <= 6
            for n in range(1, 7):
                if max(mu.support_rank, nu.support_rank) > n:
                    continue
                direct = gamma_expand(gamma(n, mu) * gamma(n, nu))
                for lam, c in direct.items():
                    assert lam.size <= k
                    if lam.size == k:
                        assert c == table[lam].constant()
        return f"{pairs} pairs, support |lambda| <= |mu|+|nu|"
    criterion("7 filtration support and top layer", 300, body)


def test_c08_cores(criterion):
    @lru_cache(maxsize=None)
    def every_core(lam, e_):
        strips = removable_border_strips(lam, e_)
        if not strips:
            return frozenset([lam])
        return frozenset().union(*(every_core(s.remove_from(lam), e_) for s in strips))

    def body():
        assert e_core(P([5, 3, 2]), 4) == P([1, 1])
        checked = 0
        for n in range(0, 11):
            for lam in partitions(n):
                for e_ in range(2, 6):
                    assert every_core(lam, e_) == {e_core(lam, e_)}, (lam, e_)
                    checked += 1
        return f"{checked} (lambda, e) pairs"
    criterion("8 4-core of (5,3,2) and order independence", 60, body)


def _pairs(n_max):
    for n in range(1, n_max + 1):
        for lam in partitions(n):
            for mu in reduced_cycle_types(n):
                yield n, lam, mu


@pytest.mark.xfail(strict=True, reason="f_mu must be evaluated at q*[c]_q, not [c]_q; see README")
def test_c09_content_evaluation_literal(criterion):
    def body():
        bad = []
        for n, lam, mu in _pairs(5):
            literal = evaluate(psi_inverse(mu), list(q_contents(lam)), n)
            if literal != central_character_seminormal(lam, mu):
                bad.append((lam, mu))
        assert not bad, f"{len(bad)} pairs differ, first {bad[0]}"
    criterion("9 scalar action = f_mu(cont_q(lambda)) with unscaled contents", 600, body)


def test_c09_content_evaluation(criterion):
    def body():
        count = 0
        for n, lam, mu in _pairs(5):
            route_b = central_character_seminormal(lam, mu)  # raises unless scalar
            route_a = evaluate(psi_inverse(mu), [q * c for c in q_contents(lam)], n)
            assert route_a == route_b, (lam, mu, route_a, route_b)
            assert central_character(lam, mu, check=False) == route_a
            count += 1
        return f"{count} pairs, f_mu at q*[c]_q"
    criterion("9 scalar action = f_mu at JM eigenvalues (two routes)", 600, body)


def test_c10_blocks(criterion):
    def body():
        for n in range(1, 9):
            parts = list(partitions(n))
            for e_ in (2, 3, 4, 5):
                bp = blocks(n, e_)
                assert sorted(itertools.chain(*bp.classes)) == sorted(parts)
                for a, b in itertools.combinations(parts, 2):
                    same_core = e_core(a, e_) == e_core(b, e_)
                    same_res = contents_mod_e(a, e_) == contents_mod_e(b, e_)
                    assert same_core == same_res == (b in bp.block_of(a)), (n, e_, a, b)
                if e_ > n:
                    assert all(len(c) == 1 for c in bp.classes)
            assert all(len(c) == 1 for c in blocks(n, math.inf).classes)
        return "n<=8, e in {2,3,4,5}"
    criterion("10 blocks by e-core = residue multisets", 120, body)


def test_c11_property_suites(criterion):
    def body():
        results = properties_suite(max_n=5, seed=7)
        failed = [r.name + ": " + r.detail for r in results if not r.passed]
        assert not failed, failed
        return f"{len(results)} suites, seed 7"
    criterion("11 relation and round-trip property suites", 300, body)
