import pytest
from hypothesis import given, strategies as st

from projcoinv.diagonal import (
    bidegree,
    diagonal_invariant_generators,
    diagonal_ring,
    membership,
    nonvacuity_control,
    phi_trivial_check,
    subset_product,
)


def test_generators():
    assert [g.label for g in diagonal_invariant_generators(1)] == ["p10", "p01"]
    assert [g.label for g in diagonal_invariant_generators(2)] == ["p10", "p01", "p20", "p11", "p02"]
    for n in range(1, 5):
        assert len(diagonal_invariant_generators(n)) == n * (n + 3) // 2
    p11 = diagonal_invariant_generators(2)[3].poly
    assert str(p11) == "a1*b1 + a2*b2"


def test_bidegree():
    R = diagonal_ring(2)
    a1, a2, b1, b2 = R.gens()
    assert bidegree(a1 * a2 * b1) == (2, 1)
    with pytest.raises(ValueError):
        bidegree(a1 + b1)


def test_generator_is_member():
    p10 = diagonal_invariant_generators(3)[0].poly
    res = membership(p10, 3)
    assert res.member and res.verified


def test_a1b2_certificate():
    R = diagonal_ring(2)
    res = membership(R.var(0) * R.var(3), 2)
    assert res.member and res.verified
    assert {g for g, _, _ in res.certificate} <= {"p10", "p01", "p11"}


def test_control():
    res = nonvacuity_control(2)
    assert not res.member
    assert res.certificate == []


def test_a1_squared_b2_membership_decided():
    R = diagonal_ring(2)
    res = membership(R.var(0) ** 2 * R.var(3), 2)
    # the diagonal coinvariants of n = 2 vanish above total degree 1
    assert res.verified
    assert res.member


bideg_11 = st.sampled_from([(1, 0, 0, 1), (0, 1, 1, 0), (1, 0, 1, 0), (0, 1, 0, 1)])


@given(st.lists(st.tuples(st.integers(-2, 2), bideg_11), min_size=1, max_size=3))
def test_certificates_re_expand(terms):
    R = diagonal_ring(2)
    target = R.zero()
    for c, e in terms:
        target = target + R.monomial(e, c)
    if target.is_zero():
        return
    res = membership(target, 2)
    assert res.verified


@pytest.mark.parametrize("n", [1, 2, 3])
def test_phi_trivial(n):
    rep = phi_trivial_check(n)
    assert rep.all_zero and rep.failures == []
    assert len(rep.checks) == 2**n
    if n >= 2:
        assert rep.control["ok"]


def test_subset_product():
    assert str(subset_product(3, [1, 3])) == "a1*a3*b2"
