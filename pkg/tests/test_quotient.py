from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from projcoinv import quotient
from projcoinv.combinat import compositions, cycle_type
from projcoinv.exact import BiPoly, QPoly, q_factorial, q_int
from projcoinv.qseries import A_alpha
from projcoinv.quotient import (
    HilbertCapError,
    ambient_trace,
    graded_trace,
    hilbert_P,
    ideal_rank,
    ideal_trace,
    invariant_dim,
    invariant_table,
    quotient_basis,
    quotient_dim,
    quotient_piece,
    quotient_table,
    socle,
    trace_by_normal_forms,
    trace_on_quotient,
)


def test_ideal_rank_examples():
    assert ideal_rank((1, 1), 1, 0) == 1
    assert ideal_rank((2, 1), 1, 7) == 0
    assert [ideal_rank((1, 1, 1), 1, e) for e in range(4)] == [1, 1, 1, 1]
    assert [quotient_dim((1, 1, 1), 1, e) for e in range(4)] == [0, 2, 2, 0]
    assert ideal_rank((1, 1, 1), 0, 0) == 0


def test_piece_invariant():
    piece = quotient_piece((2, 2), 2, 4)
    assert piece.dim == piece.ambient_dim - piece.ideal_rank >= 0
    assert len(piece.standard_columns()) == piece.dim


def test_hilbert_examples():
    assert str(hilbert_P((2, 1))) == "1 + t*q + t*q^2"
    assert hilbert_P((4,)) == 1
    assert str(hilbert_P((1, 1, 1))) == "1 + 2*t*q + 2*t*q^2 + t^2*q^3"


@pytest.mark.parametrize("alpha", [a for n in range(1, 5) for a in compositions(n)])
def test_hilbert_equals_word_statistics(alpha):
    assert hilbert_P(alpha) == A_alpha(alpha)


def test_hilbert_cap_error(monkeypatch):
    monkeypatch.setattr(quotient, "quotient_dim", lambda alpha, r, e: 1 if e == 0 else 0)
    with pytest.raises(HilbertCapError):
        quotient.quotient_table((1, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_gorenstein_shape(n):
    h = hilbert_P((1,) * n)
    assert h.is_palindromic()
    assert socle((1,) * n) == ((n - 1, n * (n - 1) // 2), 1)
    assert h.at_t_one() == q_factorial(n)


def test_mixed_example_is_palindromic():
    # computed fact for (2,2); palindromicity is not claimed for general alpha
    assert hilbert_P((2, 2)).is_palindromic()


def test_quotient_basis_sizes():
    basis = quotient_basis((2, 1))
    assert {k: len(v) for k, v in basis.items()} == {(0, 0): 1, (1, 1): 1, (1, 2): 1}


# traces -------------------------------------------------------------------------------


def test_identity_trace_is_dimension():
    for (r, e), d in quotient_table((1, 1, 1)).items():
        assert trace_on_quotient((1, 1, 1), (1, 2, 3), r, e) == d
    total = graded_trace((1,) * 4, (1, 2, 3, 4)).at_one()
    assert total == factorial(4)


def test_transposition_on_p2():
    assert ambient_trace((1, 1), (2, 1), 1, 1) == 0
    assert ideal_trace((1, 1), (2, 1), 1, 1) == 1
    assert trace_on_quotient((1, 1), (2, 1), 1, 1) == -1


def _cycle_lengths(perm):
    seen, out = set(), []
    for s in range(len(perm)):
        if s in seen:
            continue
        length, i = 0, s
        while i not in seen:
            seen.add(i)
            i = perm[i] - 1
            length += 1
        out.append(length)
    return out


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 5) for r in range(0, 4)])
def test_ambient_trace_formula(n, r):
    for perm in permutations(range(1, n + 1)):
        formula = QPoly.one()
        for c in _cycle_lengths(perm):
            formula = formula * q_int(r + 1).substitute_power(c)
        # brute force: (T_n)_r is the box [0, r]^n; count fixed points by q-degree
        brute: dict[int, int] = {}
        for v in product(range(r + 1), repeat=n):
            if all(v[perm[i] - 1] == v[i] for i in range(n)):
                e = sum(v)
                brute[e] = brute.get(e, 0) + 1
        assert QPoly(brute.get(e, 0) for e in range(r * n + 1)) == formula
        assert [ambient_trace((1,) * n, perm, r, e) for e in range(r * n + 1)] == list(formula) + [0] * (
            r * n + 1 - len(formula)
        )


@given(st.permutations((1, 2, 3, 4)))
def test_trace_routes_agree(perm):
    ones = (1, 1, 1, 1)
    for (r, e) in quotient_table(ones):
        assert trace_on_quotient(ones, perm, r, e) == trace_by_normal_forms(ones, perm, r, e)


@given(st.permutations((1, 2, 3)))
def test_slot_traces_agree(perm):
    alpha = (2, 2, 2)
    for (r, e) in quotient_table(alpha):
        assert trace_on_quotient(alpha, perm, r, e, "slots") == trace_by_normal_forms(alpha, perm, r, e, "slots")


def test_traces_are_class_functions():
    ones = (1, 1, 1, 1)
    by_type: dict = {}
    for perm in permutations(range(1, 5)):
        by_type.setdefault(cycle_type(perm), set()).add(graded_trace(ones, perm))
    assert all(len(v) == 1 for v in by_type.values())


# invariants ------------------------------------------------------------------------


def test_invariant_dim_examples():
    assert invariant_table(3, (1, 1, 1)) == hilbert_P((1, 1, 1))
    assert invariant_table(4, (4,)) == BiPoly.one()
    assert invariant_table(3, (2, 1)) == BiPoly({(0, 0): 1, (1, 1): 1, (1, 2): 1})
    with pytest.raises(ValueError):
        invariant_dim(3, (2, 2), 0, 0)


@pytest.mark.parametrize("alpha", [a for n in range(2, 5) for a in compositions(n)])
def test_invariants_equal_hilbert(alpha):
    assert invariant_table(sum(alpha), alpha) == hilbert_P(alpha)
