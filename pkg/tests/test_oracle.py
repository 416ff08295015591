import random
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from hilbring.oracle import (
    OracleCapExceeded,
    Permutation,
    class_members,
    class_size,
    compare_with_recursion,
    cycle_type,
    oracle_product,
    oracle_theta,
    perm_norm,
    perm_support,
    random_member,
    representative,
    transposition,
    valid_triples,
)
from hilbring.partitions import CycleType, enumerate_classes


@st.composite
def permutations(draw, d=None):
    d = d if d is not None else draw(st.integers(1, 7))
    return Permutation(draw(st.permutations(list(range(d)))))


@st.composite
def perm_pairs(draw):
    d = draw(st.integers(1, 7))
    return draw(permutations(d)), draw(permutations(d))


def test_composition_order():
    s = Permutation.from_cycles([[0, 1]], 3)
    t = Permutation.from_cycles([[1, 2]], 3)
    # (s t)(1) = s(t(1)) = s(2) = 2
    assert (s * t)(1) == 2
    assert (s * t) == Permutation.from_cycles([[0, 1, 2]], 3)


def test_norm_support_type():
    p = Permutation.from_cycles([[0, 1, 2], [3, 4]], 6)
    assert perm_norm(p) == 3
    assert perm_support(p) == 5
    assert cycle_type(p) == CycleType([1, 1])
    assert perm_norm(Permutation.identity(4)) == 0


@given(permutations())
def test_inverse(p):
    assert p * p.inverse() == Permutation.identity(p.degree)
    assert perm_norm(p.inverse()) == perm_norm(p)


@given(permutations(), st.data())
def test_transposition_changes_norm_by_one(p, data):
    if p.degree < 2:
        return
    i, j = data.draw(st.lists(st.integers(0, p.degree - 1), min_size=2, max_size=2, unique=True))
    t = transposition(i, j, p.degree)
    assert abs(perm_norm(p * t) - perm_norm(p)) == 1
    assert abs(perm_norm(t * p) - perm_norm(p)) == 1


@given(perm_pairs())
def test_norm_subadditive(pair):
    s, t = pair
    assert perm_norm(s * t) <= perm_norm(s) + perm_norm(t)


@given(perm_pairs())
@settings(max_examples=300)
def test_additive_factors_refine_cycles(pair):
    # when norms add, every cycle of a factor lies inside one cycle of the product
    s, t = pair
    if perm_norm(s * t) != perm_norm(s) + perm_norm(t):
        return
    owner = {}
    for k, cyc in enumerate((s * t).cycles()):
        for x in cyc:
            owner[x] = k
    for factor in (s, t):
        for cyc in factor.cycles():
            assert len({owner[x] for x in cyc}) == 1


@pytest.mark.parametrize("d", range(1, 7))
def test_class_sizes(d):
    total = 0
    for k in range(d):
        for lam in enumerate_classes(k, d):
            members = list(class_members(lam, d))
            assert len(members) == class_size(lam, d) == len(set(members))
            assert all(cycle_type(p) == lam for p in members)
            total += len(members)
    assert total == factorial(d)


def test_representative():
    rep = representative(CycleType([1, 1]), 6)
    assert rep == Permutation.from_cycles([[0, 1, 2], [3, 4]], 6)


def test_known_values():
    # delta_1^2 = 3 gamma_3 + 2 delta_2 + (norm drop terms discarded)
    assert oracle_theta(CycleType([0, 1]), CycleType([1]), CycleType([1]), 4) == 3
    assert oracle_theta(CycleType([2]), CycleType([1]), CycleType([1]), 4) == 2
    assert oracle_product(CycleType([1]), CycleType([1]), 4) == {CycleType([2]): 2, CycleType([0, 1]): 3}


def test_norm_mismatch_is_zero():
    assert oracle_theta(CycleType([1]), CycleType([1]), CycleType([1]), 4) == 0


@pytest.mark.parametrize("triple", [
    (CycleType([0, 0, 1]), CycleType([1]), CycleType([0, 1])),
    (CycleType([1, 1]), CycleType([1]), CycleType([1, 0])),
    (CycleType([0, 0, 0, 1]), CycleType([0, 1]), CycleType([0, 1])),
])
def test_conjugation_invariance(triple):
    rng = random.Random(7)
    eps, a, b = triple
    base = oracle_theta(eps, a, b, 6)
    for _ in range(5):
        rho = random_member(eps, 6, rng)
        assert oracle_theta(eps, a, b, 6, rho=rho) == base


def test_cap_enforced():
    with pytest.raises(OracleCapExceeded):
        oracle_theta(CycleType([1]), CycleType([1]), CycleType(), 9)
    with pytest.raises(OracleCapExceeded):
        oracle_theta(CycleType([1]), CycleType([1]), CycleType(), 5, cap=4)


def test_support_too_large():
    with pytest.raises(ValueError):
        oracle_theta(CycleType([0, 0, 0, 1]), CycleType([1]), CycleType([0, 0, 1]), 4)


@pytest.mark.parametrize("s", range(1, 6))
def test_recursion_agrees_exhaustively(s):
    assert compare_with_recursion(valid_triples(s), s)["passed"]


def test_d_stability_small():
    for d in range(2, 6):
        for eps, a, b in valid_triples(d):
            assert oracle_theta(eps, a, b, d) == oracle_theta(eps, a, b, d + 1)
