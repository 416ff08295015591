from fractions import Fraction

import pytest

from hilbring.partitions import Monomial, enumerate_monomials
from hilbring.presentation import (
    RelationParseError,
    conversion_matrix,
    evaluate_relation,
    expansion_matrix,
    indecomposables_dims,
    low_norm_kernel_dims,
    minimal_presentation,
    parse_polynomial,
    relation_in_kernel,
    relation_vector,
    span_contains,
    sufficient_relations,
    verify_presentation,
)
from hilbring.reference import (
    AMBIGUOUS_A8,
    AMBIGUOUS_A8_READINGS,
    RELATION_TABLE,
    RELATION_TOTALS,
    reference_relations,
)


@pytest.mark.parametrize("d", range(1, 9))
def test_relation_counts(d):
    res = minimal_presentation(d)
    row = tuple(res.count(n) for n in range(1, 12))
    assert row == RELATION_TABLE[d]
    assert res.total == RELATION_TOTALS[d]


@pytest.mark.parametrize("d", range(1, 9))
def test_minimal_relations_vanish(d):
    for rel in minimal_presentation(d).all_relations():
        assert evaluate_relation(rel, d).is_zero()


@pytest.mark.parametrize("d", range(2, 8))
def test_relations_generate_the_kernel(d):
    # lifts of lower minimal relations plus the new ones span every norm-n kernel
    res = minimal_presentation(d)
    m = d // 2
    span: dict[int, list] = {}
    for n in range(2, d + m + 1):
        vecs = []
        for i in range(1, m + 1):
            if n - i in span:
                conv = conversion_matrix(d, i, n - i)
                vecs += [[sum(conv[r, c] * v[c] for c in range(conv.cols)) for r in range(conv.rows)]
                         for v in span[n - i]]
        vecs += [list(r.coefficients) for r in res.relations.get(n, [])]
        for k in sufficient_relations(d, n):
            assert span_contains(vecs, k.coefficients)
        span[n] = vecs


@pytest.mark.parametrize("d,i,k", [(6, 1, 3), (6, 2, 2), (8, 3, 4), (9, 4, 5)])
def test_conversion_matrix_columns(d, i, k):
    conv = conversion_matrix(d, i, k)
    for c in range(conv.cols):
        assert sum(conv.column(c)) == 1
    assert conv.rows == len(enumerate_monomials(k + i, d // 2))


def test_conversion_matrix_domain():
    with pytest.raises(ValueError):
        conversion_matrix(6, 4, 2)


@pytest.mark.parametrize("d", range(2, 10))
def test_low_norm_kernels_trivial(d):
    assert all(v == 0 for v in low_norm_kernel_dims(d).values())


@pytest.mark.parametrize("d", range(2, 9))
def test_indecomposables(d):
    dims = indecomposables_dims(d)
    assert dims == {j: int(j <= d // 2) for j in range(1, d + 1)}


def test_expansion_matrix_shape():
    a = expansion_matrix(6, 4)
    assert a.shape == (3, 4)


def test_presentation_json():
    doc = minimal_presentation(4).to_json()
    assert doc["schema_version"] == 1
    assert doc["generators"] == ["gamma_2", "gamma_3"]
    assert doc["total"] == 3
    assert doc["relations"][0] == {"norm": 3, "monomials": ["X1^3", "X1*X2"], "coefficients": ["1", "-4"]}


def test_parse_polynomial():
    x3 = Monomial([3])
    xy = Monomial([1, 1])
    assert parse_polynomial("x^3-4xy", "xyzw") == {x3: 1, xy: -4}
    assert parse_polynomial("x^3 = 4 x y", "xyzw") == {x3: 1, xy: -4}
    assert parse_polynomial("X1^3 - 4*X1*X2") == {x3: 1, xy: -4}
    assert parse_polynomial("10^2de", "abcde") == {Monomial([0, 0, 0, 1, 1]): 100}
    assert parse_polynomial("a^2 - a^2", "abc") == {}
    assert parse_polynomial("-x^2", "xyzw") == {Monomial([2]): Fraction(-1)}


@pytest.mark.parametrize("bad", [AMBIGUOUS_A8, "x^2 +", "q^2", "x^2 = y = z", "x *", ""])
def test_parse_errors(bad):
    with pytest.raises(RelationParseError):
        parse_polynomial(bad, "xyzw")


@pytest.mark.parametrize("d", range(1, 8))
def test_reference_small_presentations_vanish(d):
    assert verify_presentation(d, reference_relations(d))["passed"]


def test_reference_a9_vanishes():
    assert verify_presentation(9, reference_relations(9))["passed"]


def test_ambiguous_a8_line():
    assert relation_in_kernel(AMBIGUOUS_A8_READINGS["+"], 8)
    assert not relation_in_kernel(AMBIGUOUS_A8_READINGS["-"], 8)


def test_a8_bad_entries_and_their_corrections():
    report = verify_presentation(8, reference_relations(8))
    failing = [r["relation"] for r in report["results"] if not r["ok"]]
    assert failing == [reference_relations(8)[2], reference_relations(8)[3]]
    assert relation_in_kernel("x^6 - 87x^4y + 1232x^3z - 5472x^2w + 5376yw", 8)
    assert relation_in_kernel("17x^6 - 135x^4y - 784x^3z + 5760x^2w + 3584z^2", 8)


def test_a10_misplaced_entry():
    report = verify_presentation(10, reference_relations(10))
    failing = [r for r in report["results"] if not r["ok"]]
    assert len(failing) == 1
    # the first norm-7 relation vanishes once its 60 sits under ab^3 instead of a^2e
    fixed = "-a^7 + 27a^5b - 116a^4c - 126a^3b^2 + 300a^3d + 360a^2bc + 60ab^3"
    assert relation_in_kernel(fixed, 10)


def test_verify_reports_out_of_range_generator():
    report = verify_presentation(4, ["w^2"])
    assert not report["passed"]
    assert "error" in report["results"][0]


def test_relation_vector():
    vec = relation_vector(parse_polynomial("x^3-4xy", "xy"), 3, 2)
    assert vec == [1, -4]
    with pytest.raises(ValueError):
        relation_vector({Monomial([4]): 1}, 3, 2)
