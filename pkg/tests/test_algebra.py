import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hilbring.algebra import (
    AlgebraElement,
    AmbientMismatch,
    basis,
    basis_product,
    delta,
    gamma,
    monomial_expand,
    multiply,
    project,
    tilde_multiply,
)
from hilbring.oracle import oracle_product
from hilbring.partitions import CycleType, Monomial, enumerate_classes
from hilbring.presentation import expansion_matrix
from hilbring.structure_constants import theta
from hilbring.linalg import rank

ct = CycleType


def all_classes(d):
    return [lam for k in range(d) for lam in enumerate_classes(k, d)]


def test_delta_one_squared():
    assert multiply(delta(1, 4), delta(1, 4)) == AlgebraElement(4, {ct([0, 1]): 3, ct([2]): 2})
    # in A(3) the delta_2 term has support 4 and disappears
    assert multiply(delta(1, 3), delta(1, 3)) == AlgebraElement(3, {ct([0, 1]): 3})


def test_element_arithmetic():
    x = basis(ct([1]), 4) + basis(ct([0, 1]), 4).scale(Fraction(1, 2))
    assert (x - x).is_zero()
    assert 2 * x == x + x
    assert x.coefficient(ct([0, 1])) == Fraction(1, 2)
    assert x.norms() == {1, 2}
    assert not x.is_homogeneous()
    assert x.component(1) == basis(ct([1]), 4)
    assert x ** 0 == AlgebraElement.unit(4)
    assert basis(ct([0, 0, 0, 1]), 4).is_zero()


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        gamma(2, 4) + gamma(2, 5)
    with pytest.raises(AmbientMismatch):
        multiply(gamma(2, 4), gamma(2, 5))


def test_generator_domains():
    with pytest.raises(ValueError):
        gamma(5, 4)
    with pytest.raises(ValueError):
        delta(3, 5)


@pytest.mark.parametrize("d", range(1, 7))
def test_products_match_oracle(d):
    classes = all_classes(d)
    for a, b in itertools.combinations_with_replacement(classes, 2):
        assert {k: Fraction(v) for k, v in basis_product(a, b, d).items()} == oracle_product(a, b, d)


def test_products_match_oracle_sampled_d7():
    rng = random.Random(11)
    classes = all_classes(7)
    for _ in range(12):
        a, b = rng.choice(classes), rng.choice(classes)
        assert {k: Fraction(v) for k, v in basis_product(a, b, 7).items()} == oracle_product(a, b, 7)


@st.composite
def elements(draw, d):
    classes = all_classes(d)
    terms = draw(st.dictionaries(st.sampled_from(classes), st.integers(-3, 3), max_size=3))
    return AlgebraElement(d, terms)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_commutative_and_associative(data):
    d = data.draw(st.integers(2, 7))
    x, y, z = (data.draw(elements(d)) for _ in range(3))
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@pytest.mark.parametrize("h", range(2, 8))
def test_projection_is_algebra_map(h):
    classes = all_classes(h)
    for a, b in itertools.combinations_with_replacement(classes, 2):
        prod = basis(a, h) * basis(b, h)
        for d in range(1, h + 1):
            assert project(prod, d) == project(basis(a, h), d) * project(basis(b, h), d)


def test_project_rejects_growth():
    with pytest.raises(ValueError):
        project(gamma(2, 4), 5)


@pytest.mark.parametrize("d", range(2, 9))
def test_tilde_product_is_top_support_coefficient(d):
    classes = all_classes(d)
    for a, b in itertools.combinations_with_replacement(classes, 2):
        coeff, target = tilde_multiply(a, b, d)
        if target is None:
            assert a.support + b.support > d
            continue
        assert theta(target, a, b) == coeff


def test_tilde_examples():
    assert tilde_multiply(ct([1]), ct([1]), 4) == (2, ct([2]))
    assert tilde_multiply(ct([1]), ct([1]), 3) == (0, None)
    assert tilde_multiply(ct([0, 1]), ct([1]), 5) == (1, ct([1, 1]))


@pytest.mark.parametrize("d", range(2, 10))
def test_gammas_generate(d):
    # every norm is spanned by monomials in gamma_2 .. gamma_{m+1}
    for n in range(1, d):
        assert rank(expansion_matrix(d, n)) == len(enumerate_classes(n, d))


def test_monomial_expand():
    assert monomial_expand(Monomial(), 4) == AlgebraElement.unit(4)
    assert monomial_expand(Monomial([2]), 4) == gamma(2, 4) * gamma(2, 4)
    assert monomial_expand(Monomial([1, 1]), 5) == gamma(2, 5) * gamma(3, 5)
    with pytest.raises(ValueError):
        monomial_expand(Monomial([0, 0, 1]), 3)
