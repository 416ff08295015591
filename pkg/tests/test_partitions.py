from math import factorial

import pytest
from hypothesis import given, strategies as st

from hilbring.partitions import (
    CycleType,
    Monomial,
    accel_asc,
    decompositions,
    delta_op,
    enumerate_classes,
    enumerate_monomials,
    format_cycle_type,
    format_monomial,
    parse_cycle_type,
    parse_monomial,
)

cycle_types = st.lists(st.integers(0, 3), max_size=5).map(CycleType)


def test_norm_and_support():
    lam = CycleType([2, 0, 1])  # two transpositions and a 4-cycle
    assert lam.norm == 2 + 3
    assert lam.support == 4 + 4
    assert CycleType.single(4) == CycleType([0, 0, 1])
    assert CycleType.single(1) == CycleType()
    assert CycleType.transpositions(3) == CycleType([3])


def test_trailing_zeros_are_trimmed():
    assert CycleType([1, 0, 0]) == CycleType([1])
    assert hash(CycleType([1, 0])) == hash(CycleType([1]))


def test_rejects_negative():
    with pytest.raises(ValueError):
        CycleType([1, -1])


@given(cycle_types)
def test_support_at_most_twice_norm(lam):
    assert lam.support <= 2 * lam.norm


def test_accel_asc_counts():
    assert [sum(1 for _ in accel_asc(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert all(p == sorted(p) for p in accel_asc(7))


def test_enumerate_classes_norm_three():
    assert enumerate_classes(3, 6) == [CycleType([3]), CycleType([1, 1]), CycleType([0, 0, 1])]


@pytest.mark.parametrize("d", range(1, 9))
def test_classes_partition_the_group(d):
    # sum of class sizes over every norm is d!
    total = 0
    for k in range(d):
        for lam in enumerate_classes(k, d):
            size = factorial(d) // factorial(d - lam.support)
            for i in range(2, len(lam) + 2):
                size //= i ** lam.count(i) * factorial(lam.count(i))
            total += size
    assert total == factorial(d)


@pytest.mark.parametrize("d", range(2, 13))
def test_class_and_monomial_counts_agree_in_low_norm(d):
    for j in range(1, d // 2 + 1):
        assert len(enumerate_classes(j, d)) == len(enumerate_monomials(j, d - 1))


def test_enumerate_monomials_order():
    names = [format_monomial(m, "xyz") for m in enumerate_monomials(4, 3)]
    assert names == ["x^4", "x^2*y", "x*z", "y^2"]
    assert enumerate_monomials(0, 0) == [Monomial()]
    assert enumerate_monomials(2, 0) == []


def test_delta_op():
    assert delta_op(CycleType([0, 1]), 3) == CycleType([1])
    assert delta_op(CycleType([1, 1]), 2) == CycleType([0, 1])
    assert delta_op(CycleType([0, 1]), 2) is None


def test_decompositions():
    got = decompositions(CycleType([2]), 3)
    assert sorted(got) == [(CycleType(), CycleType([2])), (CycleType([1]), CycleType([1]))]
    for a, b in decompositions(CycleType([2, 1, 1]), 4):
        assert a + b == CycleType([2, 1, 1])
        assert a.support <= 4


def test_text_round_trip():
    for text in ["[]", "[1]", "[0,1]", "[2,0,1]"]:
        assert format_cycle_type(parse_cycle_type(text)) == text
    assert parse_cycle_type(" [ 1 , 2 ] ") == CycleType([1, 2])
    with pytest.raises(ValueError):
        parse_cycle_type("1,2")
    mon = Monomial([2, 0, 1])
    assert format_monomial(mon) == "X1^2*X3"
    assert parse_monomial("X1^2*X3") == mon


@given(st.lists(st.integers(0, 4), max_size=4), st.lists(st.integers(0, 4), max_size=4))
def test_monomial_product_adds_norm(a, b):
    a, b = Monomial(a), Monomial(b)
    assert (a * b).norm == a.norm + b.norm
    assert (a * b).degree == a.degree + b.degree
