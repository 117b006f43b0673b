import pytest

from projcoinv.bases import (
    a_monomial,
    b_polynomial,
    descent_basis,
    eliminated_b_basis,
    verify_a_basis,
    verify_b_basis,
)
from projcoinv.combinat import compositions, permutations, word_stats
from projcoinv.deform import coordinate_ring


def test_no_descent_word_gives_unit():
    dm = a_monomial((2, 1), (1, 1, 2))
    assert dm.points == ()
    assert dm.bidegree == (0, 0)
    assert dm.label() == "1"


def test_word_2121():
    dm = a_monomial((2, 2), (2, 1, 2, 1))
    assert dm.points == ((0, 1), (1, 2))
    assert dm.bidegree == (2, 4)
    assert dm.label() == "y(0,1)*y(1,2)"


def test_permutation_321():
    dm = a_monomial((1, 1, 1), (3, 2, 1))
    assert dm.points == ((0, 0, 1), (0, 1, 1))
    assert dm.bidegree == (2, 3)


def test_word_content_is_checked():
    with pytest.raises(ValueError):
        a_monomial((2, 1), (1, 2, 2))


@pytest.mark.parametrize("alpha", [a for n in range(1, 5) for a in compositions(n)])
def test_bidegree_is_des_maj(alpha):
    for dm in descent_basis(alpha):
        assert dm.bidegree == dm.stats


@pytest.mark.parametrize("alpha", [a for n in range(1, 5) for a in compositions(n)])
def test_a_and_b_bases(alpha):
    assert verify_a_basis(alpha).ok
    assert verify_b_basis(alpha).ok


def test_a_basis_21_report():
    rep = verify_a_basis((2, 1))
    assert [row["bidegree"] for row in rep.per_degree] == [[0, 0], [1, 1], [1, 2]]
    assert rep.failures == []


def test_b_examples():
    assert str(b_polynomial((2, 2), (2, 1, 2, 1))) == "u1*v1*v2"
    assert str(b_polynomial((1, 1, 1), (3, 2, 1))) == "u2*u3^2"
    assert [str(b_polynomial((1, 1), w)) for w in [(1, 2), (2, 1)]] == ["1", "u2"]
    assert {str(b_polynomial((2, 1), w)): word_stats(w)[2] for w in [(1, 1, 2), (1, 2, 1), (2, 1, 1)]} == {
        "1": 0,
        "u1*v1": 2,
        "v1": 1,
    }


@pytest.mark.parametrize("n", range(1, 5))
def test_classical_descent_monomials(n):
    ring = coordinate_ring((1,) * n)
    for sigma in permutations(n):
        des = [i + 1 for i in range(n - 1) if sigma[i] > sigma[i + 1]]
        expected = ring.one()
        for i in des:
            for j in range(i):
                expected = expected * ring.var(sigma[j] - 1)
        assert b_polynomial((1,) * n, sigma) == expected


def test_grassmannian_basis_verbatim():
    rows = eliminated_b_basis((2, 2))
    assert [w for w, _, _ in rows] == ["1122", "1212", "1221", "2112", "2121", "2211"]
    assert [str(b) for _, b, _ in rows] == ["1", "u1*v1", "u1*v2", "v1", "u1*v1*v2", "v2"]
    assert [str(r) for _, _, r in rows] == ["1", "-u1^2", "u1*u2", "-u1", "-u2^2", "u1^2 - u2"]
