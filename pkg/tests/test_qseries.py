from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from projcoinv.combinat import compositions
from projcoinv.exact import BiPoly, q_binomial
from projcoinv.qseries import (
    A_alpha,
    BudgetExceeded,
    PolytopeSpec,
    des_polynomial,
    eulerian_table,
    macmahon_check,
    q_ehrhart,
    q_ehrhart_brute,
    q_ehrhart_poly,
    q_multinomial,
    segre_hilbert,
)


def _brute_stats(letters):
    out = {}
    for w in set(permutations(letters)):
        des = [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]
        key = (len(des), sum(des))
        out[key] = out.get(key, 0) + 1
    return BiPoly(out)


def test_q_multinomial_frozen():
    assert list(q_multinomial((2, 2))) == [1, 1, 2, 1, 1]
    assert list(q_multinomial((3, 2, 1))) == [1, 2, 4, 6, 8, 9, 9, 8, 6, 4, 2, 1]
    assert q_multinomial((4,)) == 1


def test_A_alpha_small_cases():
    assert str(A_alpha((2, 1))) == "1 + t*q + t*q^2"
    assert A_alpha((2, 2)) == BiPoly({(0, 0): 1, (1, 1): 1, (1, 2): 2, (1, 3): 1, (2, 4): 1})
    assert A_alpha((3,)) == 1


def test_eulerian_table_s4_frozen():
    # brute force over S_4 with itertools
    expected = {(0, 0): 1, (1, 1): 3, (1, 2): 5, (1, 3): 3, (2, 3): 3, (2, 4): 5, (2, 5): 3, (3, 6): 1}
    assert eulerian_table(4) == BiPoly(expected)


@pytest.mark.parametrize("alpha", [(1, 1, 2), (2, 1, 1), (3, 2), (2, 2, 1)])
def test_A_alpha_matches_brute_force(alpha):
    letters = [j + 1 for j, a in enumerate(alpha) for _ in range(a)]
    assert A_alpha(alpha) == _brute_stats(letters)


@pytest.mark.parametrize("n", range(1, 7))
def test_eulerian_palindromic(n):
    assert eulerian_table(n).is_palindromic()


def test_simon_newcomb_numbers():
    assert des_polynomial((1, 1, 1, 1)) == [1, 11, 11, 1]
    assert des_polynomial((2, 2)) == [1, 4, 1]


@pytest.mark.parametrize("alpha", [a for n in range(1, 5) for a in compositions(n)])
def test_t_one_specialization_is_q_multinomial(alpha):
    assert A_alpha(alpha).at_t_one() == q_multinomial(alpha)


def test_macmahon_identity_small():
    rep = macmahon_check((2, 1), 6)
    assert rep.holds and rep.mismatches == []
    assert rep.to_json()["holds"] is True


def test_segre_numerators():
    # series = numerator / prod_{j=0}^n (1 - t q^j)
    from projcoinv.exact import koszul_product

    for alpha, numerator in [
        ((2, 1), "1 + t*q + t*q^2"),
        ((2, 2), "1 + t*q + 2*t*q^2 + t*q^3 + t^2*q^4"),
    ]:
        n = sum(alpha)
        series = segre_hilbert(alpha, 6, "lattice") * koszul_product(range(n + 1))
        assert str(series.to_bipoly()) == numerator


@given(st.lists(st.integers(1, 2), min_size=1, max_size=3).map(tuple), st.integers(0, 4))
def test_segre_methods_agree(alpha, order):
    assert segre_hilbert(alpha, order, "lattice") == segre_hilbert(alpha, order, "closed_form")


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 4) for r in range(0, 5)])
def test_ehrhart_simplex_is_q_binomial(n, r):
    spec = PolytopeSpec.simplex(n)
    assert q_ehrhart_poly(spec, r) == q_binomial(r + n, n)


def test_ehrhart_hypercube_and_negative_weights():
    spec = PolytopeSpec.hypercube(2)
    assert q_ehrhart(spec, 1) == {0: 1, 1: 2, 2: 1}
    signed = PolytopeSpec.hypercube(2, (1, -1))
    assert q_ehrhart(signed, 1) == {-1: 1, 0: 2, 1: 1}
    with pytest.raises(ValueError):
        q_ehrhart_poly(signed, 1)


@given(st.lists(st.integers(1, 2), min_size=1, max_size=3).map(tuple), st.integers(0, 3))
def test_ehrhart_block_and_box_routes_agree(dims, r):
    weights = tuple(range(1, sum(dims) + 1))
    spec = PolytopeSpec(dims, weights)
    counts = q_ehrhart(spec, r)
    assert counts == q_ehrhart_brute(spec, r)
    assert sum(counts.values()) == spec.lattice_point_count(r)


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        q_ehrhart(PolytopeSpec.simplex(10), 10, budget=100)
    with pytest.raises(BudgetExceeded):
        q_ehrhart_brute(PolytopeSpec.simplex(3), 5, budget=10)
