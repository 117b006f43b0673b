import pytest
from hypothesis import given, strategies as st

from projcoinv.segre import (
    AlgebraElement,
    SegreMonomial,
    action_function,
    chi_alpha_image,
    chi_alpha_monomial,
    e_tilde,
    generator_element,
    generator_monomial,
    generators,
    group_action,
    multiply_generator,
    piece_basis,
    piece_census,
    subset_generator,
    unit,
    young_subgroup,
)
from projcoinv.exact import q_binomial


def test_generators_of_21():
    assert generators((2, 1)) == ((0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1))


def test_generator_monomial_bidegree():
    y = generator_monomial((2, 2), (1, 2))
    assert y.bidegree == (1, 3)
    assert y.parts == ((1,), (2,))
    with pytest.raises(ValueError):
        generator_monomial((2, 1), (0, 2))


def test_piece_census_21_r1():
    assert piece_census((2, 1), 1) == [1, 2, 2, 1]
    assert [len(v) for v in piece_basis((2, 1), 1).values()] == [1, 2, 2, 1]


@pytest.mark.parametrize("alpha,r", [((1, 1, 1), 2), ((2, 1), 3), ((3,), 4), ((2, 2), 2)])
def test_piece_census_is_product_of_q_binomials(alpha, r):
    expected = q_binomial(r + alpha[0], alpha[0])
    for a in alpha[1:]:
        expected = expected * q_binomial(r + a, a)
    assert piece_census(alpha, r) == list(expected)


def test_monomial_text_and_order():
    m = SegreMonomial.from_parts((2, 1), 2, [(2, 1), (1,)])
    assert str(m) == "r=2; [2,1|1]"
    assert m.sort_key() == (2, 1, 1, 0)
    assert m.to_json() == {"r": 2, "parts": [[2, 1], [1]]}


def test_multiply_generator_inserts_parts():
    m = generator_monomial((2, 1), (2, 0))
    out = multiply_generator((1, 1), m)
    assert out.parts == ((2, 1), (1,))
    assert out.r == 2


monomials_21 = st.builds(
    lambda gens: [generator_monomial((2, 1), g) for g in gens],
    st.lists(st.sampled_from(generators((2, 1))), max_size=4),
)


@given(monomials_21, monomials_21)
def test_products_commute_and_add_bidegrees(xs, ys):
    a, b = unit((2, 1)), unit((2, 1))
    for x in xs:
        a = a * x
    for y in ys:
        b = b * y
    assert a * b == b * a
    assert (a * b).bidegree == tuple(u + v for u, v in zip(a.bidegree, b.bidegree))


def test_e_tilde_singletons():
    e1 = e_tilde((1, 1, 1), 1)
    assert e1.r == 1 and len(e1.terms) == 3
    assert e1.q_degrees() == {1}
    assert e_tilde((2, 1), 0) == generator_element((2, 1), (0, 0))


def test_chi_image_of_block_generator():
    img = chi_alpha_image((2, 1), (1, 0))
    expected = generator_element((1, 1, 1), subset_generator(3, [1])) + generator_element(
        (1, 1, 1), subset_generator(3, [2])
    )
    assert img == expected


@pytest.mark.parametrize("alpha", [(2, 1), (1, 2), (2, 2), (3, 1)])
def test_chi_images_are_invariant(alpha):
    for gen in generators(alpha):
        img = chi_alpha_image(alpha, gen)
        for g in young_subgroup(alpha):
            assert group_action(g, img, "sn") == img


def test_chi_of_product():
    out = chi_alpha_monomial((2,), [(1,), (1,)])
    assert out.r == 2
    assert sum(out.terms.values()) == 4


def test_actions():
    act = action_function((1, 1, 1), (2, 3, 1))
    assert act((1, 0, 0)) == (0, 1, 0)
    slots = action_function((2, 2), (2, 1), "slots")
    assert slots((1, 0, 0, 2)) == (0, 2, 1, 0)
    with pytest.raises(ValueError):
        action_function((2, 1), (2, 1), "slots")
    with pytest.raises(ValueError):
        action_function((2, 1), (2, 1, 3), "sn")


def test_young_subgroup_size():
    assert len(list(young_subgroup((2, 1, 2)))) == 4
    assert sorted(young_subgroup((1, 2))) == [(1, 2, 3), (1, 3, 2)]


def test_algebra_element_arithmetic():
    x = generator_element((1, 1), (1, 0))
    y = generator_element((1, 1), (0, 1))
    s = x + y
    assert (s * s).r == 2
    assert (s - s).is_zero()
    assert (s * 2).terms == {m: 2 for m in s.terms}
    with pytest.raises(ValueError):
        s + AlgebraElement.from_monomial(unit((1, 1)))
