"""One test per acceptance criterion; each prints a PASS/FAIL line in the run summary."""

import time
from itertools import permutations as itertools_permutations
from math import factorial

from projcoinv.bases import a_monomial, eliminated_b_basis, verify_a_basis, verify_b_basis
from projcoinv.characters import char_P, character_table, invariants_free_check, residual_char
from projcoinv.combinat import (
    compositions,
    conjugate,
    enumerate_words,
    partitions,
    path_to_word,
    standard_tableaux,
    word_to_path,
)
from projcoinv.deform import eliminate, hilbert_R, presentation_R, semisimple_fibre_check
from projcoinv.diagonal import phi_trivial_check
from projcoinv.exact import BiPoly, QPoly, koszul_product, q_binomial, q_factorial, q_int
from projcoinv.qseries import A_alpha, PolytopeSpec, macmahon_check, q_ehrhart_brute, q_multinomial, segre_hilbert
from projcoinv.quotient import hilbert_P, invariant_table


def _all_compositions(max_n: int):
    return [a for n in range(1, max_n + 1) for a in compositions(n)]


def _permutation_statistics(n: int) -> BiPoly:
    terms: dict = {}
    for p in itertools_permutations(range(n)):
        des = [i + 1 for i in range(n - 1) if p[i] > p[i + 1]]
        terms[(len(des), sum(des))] = terms.get((len(des), sum(des)), 0) + 1
    return BiPoly(terms)


def _fake_degree(lam) -> QPoly:
    """``q^{b(lam)} [n]_q! / prod_cells [hook]_q``."""
    conj = conjugate(lam)
    den = QPoly.one()
    for i, row in enumerate(lam):
        for j in range(row):
            den = den * q_int(row - j + conj[j] - i - 1)
    b = sum(i * part for i, part in enumerate(lam))
    return (QPoly.monomial(b) * q_factorial(sum(lam))).exact_div(den)


def test_criterion_01_hilbert_of_Pn(criterion):
    timings = {}
    ok = True
    for n in range(1, 6):
        start = time.perf_counter()
        ok &= hilbert_P((1,) * n) == _permutation_statistics(n)
        timings[n] = time.perf_counter() - start
    ok &= timings[5] < 300
    criterion(1, ok, f"hilbert_P((1^n)) = sum t^des q^maj for n<=5; n=5 took {timings[5]:.1f}s")


def test_criterion_02_hilbert_of_P_alpha(criterion):
    bad = [a for a in _all_compositions(5) if hilbert_P(a) != A_alpha(a)]
    criterion(2, not bad, f"hilbert_P = A_alpha for all {len(_all_compositions(5))} compositions n<=5; failures {bad}")


def test_criterion_03_macmahon(criterion):
    start = time.perf_counter()
    bad = [a for a in _all_compositions(6) if not macmahon_check(a, 8).holds]
    elapsed = time.perf_counter() - start
    criterion(3, not bad and elapsed < 60, f"MacMahon identity R=8 for all alpha, n<=6 in {elapsed:.1f}s; failures {bad}")


def test_criterion_04_q_ehrhart(criterion):
    bad = []
    for n in range(1, 5):
        spec = PolytopeSpec.simplex(n)
        for r in range(7):
            counts = q_ehrhart_brute(spec, r)
            got = QPoly(counts.get(e, 0) for e in range(max(counts) + 1))
            if got != q_binomial(r + n, n):
                bad.append((n, r))
    criterion(4, not bad, f"box-scan q-Ehrhart of the simplex = [r+n, n]_q for n<=4, r<=6; failures {bad}")


def test_criterion_05_segre_series(criterion):
    bad = [a for a in _all_compositions(5) if segre_hilbert(a, 5, "lattice") != segre_hilbert(a, 5, "closed_form")]
    numerators = {}
    for alpha in [(2, 1), (2, 2)]:
        series = segre_hilbert(alpha, 6, "lattice") * koszul_product(range(sum(alpha) + 1))
        numerators[alpha] = str(series.to_bipoly())
    ok = not bad and numerators == {
        (2, 1): "1 + t*q + t*q^2",
        (2, 2): "1 + t*q + 2*t*q^2 + t*q^3 + t^2*q^4",
    }
    criterion(5, ok, f"lattice = closed form for n<=5, R=5; numerators {numerators}")


def test_criterion_06_characters(criterion):
    ok = True
    for n in range(1, 7):
        syt = char_P(n, "syt")
        ok &= char_P(n, "koszul") == syt
        if n <= 4:
            ok &= char_P(n, "trace") == syt
        ok &= all(syt.coeff(lam).at_t_one() == _fake_degree(lam) for lam in partitions(n))
    criterion(6, ok, "syt = koszul (n<=6) = trace (n<=4); t=1 gives sum_T q^maj(T) s_lam")


def test_criterion_07_young_invariants(criterion):
    bad = []
    for alpha in _all_compositions(5):
        table = invariant_table(sum(alpha), alpha)
        if table != hilbert_P(alpha) or table.at_t_one() != q_multinomial(alpha):
            bad.append(alpha)
    criterion(7, not bad, f"invariant tables = hilbert_P(alpha), t=1 = q-multinomial, n<=5; failures {bad}")


def test_criterion_08_partial_coinvariants(criterion):
    bad = [a for a in _all_compositions(5) if hilbert_R(a) != q_multinomial(a)]
    e21 = [str(g) for g in eliminate(presentation_R((2, 1), 1)).generators]
    e22 = [str(g) for g in eliminate(presentation_R((2, 2), 0)).generators]
    ok = not bad and e21 == ["u1^3 + 1"] and e22 == ["u1^3 - 2*u1*u2", "u1^2*u2 - u2^2"]
    criterion(8, ok, f"hilbert_R = q-multinomial n<=5; (2,1) at s=1 -> {e21}; (2,2) -> {e22}")


def test_criterion_09_semisimple_fibre(criterion):
    start = time.perf_counter()
    reports = [semisimple_fibre_check(n) for n in range(1, 6)]
    elapsed = time.perf_counter() - start
    ok = all(r.ok and r.rank == factorial(r.n) for r in reports) and elapsed < 300
    ranks = [r.rank for r in reports]
    criterion(9, ok, f"evaluation ranks {ranks} over Q(eta) for n<=5 in {elapsed:.1f}s")


def test_criterion_10_residual(criterion):
    pairs = [(2, 1), (2, 2), (3, 2), (2, 3)]
    bad = [p for p in pairs if residual_char(*p, "plethysm") != residual_char(*p, "trace")]
    criterion(10, not bad, f"plethysm = trace for (k,m) in {pairs}; failures {bad}")


def test_criterion_11_bases(criterion):
    bad = [a for a in _all_compositions(5) if not (verify_a_basis(a).ok and verify_b_basis(a).ok)]
    reduced = [str(r) for _, _, r in eliminated_b_basis((2, 2))]
    points = a_monomial((2, 2), (2, 1, 2, 1)).points
    ok = (
        not bad
        and reduced == ["1", "-u1^2", "u1*u2", "-u1", "-u2^2", "u1^2 - u2"]
        and points == ((0, 1), (1, 2))
    )
    criterion(11, ok, f"a_w and b_w bases for n<=5; (2,2) basis {reduced}; 2121 points {points}")


def test_criterion_12_diagonal(criterion):
    reports = [phi_trivial_check(n) for n in range(1, 5)]
    ok = all(r.all_zero for r in reports) and reports[1].control["ok"]
    criterion(12, ok, f"all subset products in the ideal for n<=4; control a1 member={reports[1].control['member']}")


def test_criterion_13_free_invariants(criterion):
    bad = [n for n in range(1, 5) if not invariants_free_check(n, 4).holds]
    criterion(13, not bad, f"invariants of T_n = monomials in e~ for n<=4, r<=4; failures {bad}")


def test_criterion_14_properties(criterion):
    palindromic = all(A_alpha((1,) * n).is_palindromic() for n in range(1, 8))
    squares = all(
        sum(len(standard_tableaux(lam)) ** 2 for lam in partitions(n)) == factorial(n) for n in range(1, 9)
    )
    orthogonal = all(character_table(n).is_orthonormal() for n in range(1, 9))
    round_trip = all(
        path_to_word(word_to_path(w, len(a))) == w and word_to_path(w, len(a))[-1] == a
        for a in _all_compositions(5)
        for w in enumerate_words(a)
    )
    ok = palindromic and squares and orthogonal and round_trip
    criterion(
        14,
        ok,
        f"palindromic n<=7 {palindromic}; SYT squares n<=8 {squares}; "
        f"orthogonality n<=8 {orthogonal}; word/path round trip n<=5 {round_trip}",
    )
