"""
Self-verification suites behind `qfh verify`.

Each check returns a `CheckResult`; a suite passes when every check does.
The `paper` suite checks fixed worked examples: the GR basis of H_3, the
square of Gamma_(1), f_mu formulas, cores and blocks; the `properties` suite
runs relation and round-trip checks, with randomness drawn from an explicit seed.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from .combinat import Partition, contents_mod_e, e_core, partitions, partitions_up_to
from .exactalg import IVLPoly, LaurentQ, binom, q
from .fhq import (K, n_matrix, psi, psi_inverse, structure_constants, theta)
from .hecke import (HeckeElem, T, ev_n, gamma, gamma_expand, generator, geck_rouquier_basis,
                    identity, is_central, jm_element, specialize_q1)
from .hecke.algebra import T_word
from .specht import blocks, central_character, jm_eigenvalues, seminormal_rep
from .symfunc import (EPolyElem, SymFuncElem, e, e_to_m, evaluate, m, m_to_e,
                      monomial_mul, monomial_mul_expand)
from .symmgroup import Permutation, all_permutations, class_sum, from_word, reduced_cycle_types

__all__ = ["CheckResult", "examples_suite", "properties_suite", "run_suite", "psi_e1_squared_report"]

P = Partition
QINV = LaurentQ.monomial(-1)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail,
                "seconds": round(self.seconds, 3)}


def _run(name: str, fn: Callable[[], tuple[bool, str] | bool]) -> CheckResult:
    start = time.perf_counter()
    try:
        out = fn()
        passed, detail = out if isinstance(out, tuple) else (bool(out), "")
    except Exception as exc:  # a crashing check is a failing check
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, bool(passed), detail, time.perf_counter() - start)


def gamma1_squared_expected(n: int) -> dict[Partition, LaurentQ]:
    """(q+q^-1)G_(1,1) + (q+1+q^-1)G_(2) + (n-1)(q-1)G_(1) + C(n,2)q G_(), surviving terms only."""
    full = {
        P([1, 1]): q + QINV,
        P([2]): q + 1 + QINV,
        P([1]): (q - 1) * (n - 1),
        P(): q * binom(n, 2),
    }
    return {lam: c for lam, c in full.items() if lam.support_rank <= n and c}


def k1_square_table() -> dict[Partition, IVLPoly]:
    return {
        P([1, 1]): IVLPoly(q + QINV),
        P([2]): IVLPoly(q + 1 + QINV),
        P([1]): IVLPoly({1: q - 1, 0: 1 - q}),
        P(): IVLPoly({2: q}),
    }


def expected_f() -> dict[Partition, EPolyElem]:
    one_t = IVLPoly({1: q - 1, 0: 1 - q})  # (q-1)(t-1)
    c2 = IVLPoly({2: q})         # q C(t,2)
    return {
        P([1]): EPolyElem({(1,): 1}),
        P([2]): EPolyElem({(1, 1): 1, (2,): -(q + QINV), (1,): -one_t, (): -c2}),
        P([1, 1]): EPolyElem({(2,): q + 1 + QINV, (1, 1): -1, (1,): one_t, (): c2}),
    }


def psi_e1_squared_report() -> dict:
    """Which printed K_(2)-coefficient of Psi(e_1^2) agrees with the computation."""
    coeff = psi(e(1) * e(1))[P([2])]
    candidates = {"q + 1 + q^-1": IVLPoly(q + 1 + QINV),
                  "q^2 + 1 + q^-2": IVLPoly(q * q + 1 + QINV * QINV)}
    return {"computed": str(coeff),
            "matches": sorted(k for k, v in candidates.items() if v == coeff)}


# -- worked examples ---------------------------------------------------------------

def _check_h3() -> tuple[bool, str]:
    basis = geck_rouquier_basis(3)
    p = lambda s: Permutation.from_cycles(s, 3)
    want = {
        P(): T(Permutation.identity(3)),
        P([1]): T(p("(1 2)")) + T(p("(2 3)")) + T(p("(1 3)")).scale(QINV),
        P([2]): T(p("(1 2 3)")) + T(p("(1 3 2)")) + T(p("(1 3)")).scale((q - 1) * QINV),
    }
    return basis == want, ", ".join(f"{k}: {v}" for k, v in basis.items())


def _check_gamma1_squared(n_max: int = 6) -> tuple[bool, str]:
    bad = []
    for n in range(2, n_max + 1):
        g = gamma(n, P([1]))
        if gamma_expand(g * g) != gamma1_squared_expected(n):
            bad.append(n)
    return not bad, f"mismatch at n={bad}" if bad else f"n=2..{n_max}"


def _check_k1_square() -> tuple[bool, str]:
    table = structure_constants(P([1]), P([1]))
    classical = {lam: c.at_q1() for lam, c in table.items() if c.at_q1()}
    want_q1 = {P([1, 1]): IVLPoly(2), P([2]): IVLPoly(3), P(): IVLPoly({2: 1})}
    ok = table == k1_square_table() and classical == want_q1
    return ok, "; ".join(f"{lam}: {c}" for lam, c in table.items())


def _check_ev_e(r_max: int = 3, n_max: int = 6) -> tuple[bool, str]:
    for n in range(1, n_max + 1):
        for r in range(0, r_max + 1):
            want = identity(n) if r == 0 else sum(
                (gamma(n, mu) for mu in partitions(r)), HeckeElem(n))
            if ev_n(e(r), n) != want:
                return False, f"fails at r={r}, n={n}"
    return True, f"r<={r_max}, n<={n_max}"


def _check_f_mu() -> tuple[bool, str]:
    want = expected_f()
    for mu, f in want.items():
        got = psi_inverse(mu)
        if m_to_e(got) != f or psi(got) != K(mu):
            return False, f"f_{mu} = {m_to_e(got)}"
    report = psi_e1_squared_report()
    return report["matches"] == ["q + 1 + q^-1"], (
        f"Psi(e_1^2) K_(2)-coefficient computed as {report['computed']}; "
        f"agrees with printed value(s) {report['matches']}")


def _check_n_matrix(k_max: int = 4) -> tuple[bool, str]:
    dets = []
    for k in range(1, k_max + 1):
        mat = n_matrix(k)
        if not mat.determinant.is_unit():
            return False, f"k={k}: det {mat.determinant}"
        dets.append(f"k={k}: det {mat.determinant}")
    return True, "; ".join(dets)


def check_filtration(k_max: int = 4) -> tuple[bool, str]:
    pairs = 0
    for mu, nu in itertools.combinations_with_replacement(partitions_up_to(k_max), 2):
        k = mu.size + nu.size
        if k > k_max:
            continue
        pairs += 1
        for lam, c in structure_constants(mu, nu).items():
            if lam.size > k:
                return False, f"{mu}x{nu} has support on {lam}"
            if lam.size == k and not c.is_constant():
                return False, f"{mu}x{nu}: top coefficient of {lam} depends on t"
    return True, f"{pairs} pairs"


def _check_core_example() -> tuple[bool, str]:
    core = e_core(P([5, 3, 2]), 4)
    return core == P([1, 1]), f"4-core of (5,3,2) is {core}"


def check_scalar_action(n_max: int = 5) -> tuple[bool, str]:
    """Route A (f_mu at q[c]_q) against Route B (seminormal matrices)."""
    count = 0
    for n in range(1, n_max + 1):
        for lam in partitions(n):
            for mu in reduced_cycle_types(n):
                central_character(lam, mu, check=True)
                count += 1
    return True, f"{count} pairs agree"


def literal_content_evaluation(n_max: int = 5) -> list[tuple[Partition, Partition]]:
    """Pairs where f_mu at the unscaled q-contents [c]_q differs from the action of Gamma_mu."""
    from .combinat import q_contents
    bad = []
    for n in range(1, n_max + 1):
        for lam in partitions(n):
            for mu in reduced_cycle_types(n):
                if evaluate(psi_inverse(mu), list(q_contents(lam)), n) != central_character(lam, mu, check=False):
                    bad.append((lam, mu))
    return bad


def _check_block_examples() -> tuple[bool, str]:
    ok = (blocks(3, 2).classes == ((P([3]), P([1, 1, 1])), (P([2, 1]),))
          and blocks(2, 2).classes == ((P([2]), P([1, 1])),)
          and all(len(c) == 1 for c in blocks(3, 4).classes))
    return ok, str(blocks(3, 2).to_json()["blocks"])


def examples_suite() -> list[CheckResult]:
    return [
        _run("gr basis of H_3", _check_h3),
        _run("Gamma_(1)^2 in H_n, n=2..6", _check_gamma1_squared),
        _run("structure constants (1)x(1) and q=1", _check_k1_square),
        _run("ev_n(e_r) = sum of Gamma_mu", _check_ev_e),
        _run("f_(1), f_(2), f_(1,1) and Psi(e_1^2)", _check_f_mu),
        _run("N^(k) unit determinants, k<=4", _check_n_matrix),
        _run("filtration support and top layer", check_filtration),
        _run("4-core of (5,3,2)", _check_core_example),
        _run("scalar action and content evaluation, n<=5", check_scalar_action),
        _run("block examples", _check_block_examples),
    ]


# -- properties suite ----------------------------------------------------------

def check_hecke_relations(n_max: int) -> tuple[bool, str]:
    for n in range(2, n_max + 1):
        gens = [generator(i, n) for i in range(1, n)]
        one = identity(n)
        for i, t in enumerate(gens):
            if t * t != t.scale(q - 1) + one.scale(q):
                return False, f"quadratic fails n={n} i={i + 1}"
            for j in range(i + 1, len(gens)):
                u = gens[j]
                if j == i + 1 and t * u * t != u * t * u:
                    return False, f"braid fails n={n} i={i + 1}"
                if j > i + 1 and t * u != u * t:
                    return False, f"commutation fails n={n} i={i + 1} j={j + 1}"
    return True, f"n<={n_max}"


def _all_reduced_words(w: Permutation) -> list[list[int]]:
    if not any(w[i] > w[i + 1] for i in range(len(w) - 1)):
        return [[]]
    out = []
    for d in w.right_descents():
        out += [word + [d] for word in _all_reduced_words(w.right_simple(d))]
    return out


def check_matsumoto(n: int = 4) -> tuple[bool, str]:
    words = 0
    for w in all_permutations(n):
        elems = set()
        for word in _all_reduced_words(w):
            words += 1
            if from_word(word, n) != w:
                return False, f"word {word} is not a word for {w}"
            elems.add(T_word(word, n))
        if elems != {T(w)}:
            return False, f"T_{w} depends on the reduced word"
    return True, f"{words} reduced words in S_{n}"


def check_jm_commute(n_max: int) -> tuple[bool, str]:
    for n in range(1, n_max + 1):
        ls = [jm_element(i, n) for i in range(1, n + 1)]
        for a, b in itertools.combinations(ls, 2):
            if a * b != b * a:
                return False, f"n={n}"
    return True, f"n<={n_max}"


def check_gr_properties(n_max: int) -> tuple[bool, str]:
    for n in range(1, n_max + 1):
        for mu, g in geck_rouquier_basis(n).items():
            if not is_central(g) or specialize_q1(g) != class_sum(n, mu):
                return False, f"Gamma_{mu} in H_{n}"
    return True, f"n<={n_max}"


def _random_laurent(rng: random.Random) -> LaurentQ:
    return LaurentQ({rng.randint(-2, 2): rng.randint(-3, 3) for _ in range(rng.randint(0, 3))})


def check_gamma_expand_roundtrip(n_max: int, rng: random.Random, trials: int = 3) -> tuple[bool, str]:
    for n in range(1, n_max + 1):
        basis = geck_rouquier_basis(n)
        for _ in range(trials):
            coeffs = {mu: _random_laurent(rng) for mu in basis}
            coeffs = {mu: c for mu, c in coeffs.items() if c}
            z = sum((basis[mu].scale(c) for mu, c in coeffs.items()), HeckeElem(n))
            if gamma_expand(z) != coeffs:
                return False, f"n={n}, coefficients {coeffs}"
    return True, f"n<={n_max}, {trials} trials each"


def check_ev_multiplicative(n_max: int) -> tuple[bool, str]:
    fs = [e(1), e(2), m([1, 1]), m([2])]
    for n in range(1, n_max + 1):
        for f, g in itertools.combinations_with_replacement(fs, 2):
            if ev_n(f * g, n) != ev_n(f, n) * ev_n(g, n):
                return False, f"n={n}, f={f}, g={g}"
    return True, f"n<={n_max}"


def check_symfunc_roundtrips(degree: int = 5) -> tuple[bool, str]:
    for k in range(degree + 1):
        for lam in partitions(k):
            f = m(lam)
            if e_to_m(m_to_e(f)) != f:
                return False, f"m_{lam}"
    for a, b in itertools.combinations_with_replacement(partitions_up_to(3), 2):
        if monomial_mul(m(a), m(b)) != monomial_mul_expand(m(a), m(b)):
            return False, f"m_{a} m_{b}"
    return True, f"degree<={degree}"


def check_evaluate_symmetric(rng: random.Random, trials: int = 20) -> tuple[bool, str]:
    for _ in range(trials):
        k = rng.randint(0, 4)
        lam = rng.choice(list(partitions(k)))
        vals = [_random_laurent(rng) for _ in range(rng.randint(0, 5))]
        t = rng.randint(0, 6)
        shuffled = vals[:]
        rng.shuffle(shuffled)
        f = m(lam) + e(2)
        if evaluate(f, vals, t) != evaluate(f, shuffled, t):
            return False, f"{lam} at {vals}"
    return True, f"{trials} trials"


def check_seminormal(n_max: int) -> tuple[bool, str]:
    for n in range(1, n_max + 1):
        for lam in partitions(n):
            rep = seminormal_rep(lam)
            rep.check_relations()
            rep.check_jm()
    return True, f"n<={n_max}"


def check_block_contents(n_max: int = 8, es=(2, 3, 4, 5)) -> tuple[bool, str]:
    for n in range(1, n_max + 1):
        parts = list(partitions(n))
        for e_ in es:
            bp = blocks(n, e_)
            for a, b in itertools.combinations(parts, 2):
                same_core = e_core(a, e_) == e_core(b, e_)
                same_res = contents_mod_e(a, e_) == contents_mod_e(b, e_)
                same_block = b in bp.block_of(a)
                if not (same_core == same_res == same_block):
                    return False, f"n={n}, e={e_}: {a} vs {b}"
        if any(len(c) != 1 for c in blocks(n, n + 1).classes):
            return False, f"e > n not semisimple at n={n}"
    return True, f"n<={n_max}, e in {list(es)}"


def check_theta_homomorphism(rng: random.Random, trials: int = 3) -> tuple[bool, str]:
    small = partitions_up_to(2)
    for _ in range(trials):
        a = K(rng.choice(small), rng.randint(1, 3)) + K(rng.choice(small))
        b = K(rng.choice(small), rng.randint(-2, 2) or 1)
        if theta(a * b) != theta(a) * theta(b):
            return False, f"{a} * {b}"
    return True, f"{trials} trials"


def properties_suite(max_n: int = 5, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    n5 = min(max_n, 5)
    return [
        _run("Hecke relations", lambda: check_hecke_relations(n5)),
        _run("Matsumoto consistency on S_4", lambda: check_matsumoto(min(max_n, 4))),
        _run("JM elements commute", lambda: check_jm_commute(n5)),
        _run("GR basis central with q=1 class sums", lambda: check_gr_properties(n5)),
        _run("gamma_expand round trip", lambda: check_gamma_expand_roundtrip(n5, rng)),
        _run("ev_n multiplicative", lambda: check_ev_multiplicative(n5)),
        _run("monomial/e-basis round trips", check_symfunc_roundtrips),
        _run("evaluate is symmetric", lambda: check_evaluate_symmetric(rng)),
        _run("seminormal relations and JM diagonal", lambda: check_seminormal(n5)),
        _run("blocks match content residues", check_block_contents),
        _run("theta is multiplicative", lambda: check_theta_homomorphism(rng)),
    ]


def run_suite(name: str, max_n: int = 5, seed: int = 0) -> list[CheckResult]:
    if name == "paper":
        return examples_suite()
    if name == "properties":
        return properties_suite(max_n, seed)
    if name == "all":
        return examples_suite() + properties_suite(max_n, seed)
    raise ValueError(f"unknown suite {name!r}")
