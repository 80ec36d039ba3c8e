from fractions import Fraction

import pytest

from whittaker_paths.cartan import WeightParam, build_cartan
from whittaker_paths.errors import CapExceeded, DimensionMismatch, UnsupportedType
from whittaker_paths.finite import (
    a2_higher_recursion_check,
    a2_higher_recursions,
    bump_closed_form,
    series_exponent,
    third_order_coefficient_check,
    third_order_eigenvalue,
    toda_eigen_identity,
    toda_eigenvalue,
    whittaker_series,
    whittaker_vector,
)
from whittaker_paths.paths import PartitionTable, lattice_points


def test_vector_degree_zero(a2):
    cd, w = a2
    (term,) = whittaker_vector(cd, w, 0)
    assert term.word() == "" and term.coefficient == 1


def test_vector_words(a2, l1, l2):
    cd, w = a2
    terms = {t.word(): t.coefficient for t in whittaker_vector(cd, w, 2)}
    assert terms["f2 f1"] == 1 / (l1 * (l1 + l2 + 1))
    assert terms["f1 f2"] == 1 / (l2 * (l1 + l2 + 1))
    assert set(terms) == {"", "f1", "f2", "f1 f1", "f2 f2", "f2 f1", "f1 f2"}


def test_vector_cap(a2):
    cd, w = a2
    with pytest.raises(CapExceeded):
        whittaker_vector(cd, w, 11)


def test_g2_vector(l1, l2):
    terms = {t.word(): t.coefficient for t in whittaker_vector(build_cartan("G2"), WeightParam.symbolic(2), 2)}
    assert terms["f1 f2"] == 1 / (3 * l2 * (l1 + 3 * l2 + 3))
    assert terms["f2 f2"] == 1 / (18 * l2 * (l2 - 1))


def test_series_exponent(a2, l1, l2):
    cd, w = a2
    # lambda_i + 1 - sum_j C_ji beta_j
    assert series_exponent(cd, w, (1, 1)) == (l1, l2)
    assert series_exponent(cd, w, (2, 0), modified=False) == (l1 - 4, l2 + 2)


def test_series_terms(a2):
    cd, w = a2
    terms = whittaker_series(cd, w, 3)
    assert len(terms) == 10
    t = PartitionTable(cd, w)
    assert all(term.coefficient == t[term.beta] for term in terms)


def test_series_rejects_affine(affine_a1):
    with pytest.raises(UnsupportedType):
        whittaker_series(*affine_a1, 2)


def test_toda_eigenvalues(l1, l2):
    assert toda_eigenvalue(build_cartan("A1"), WeightParam.symbolic(1)) == (l1 + 1) ** 2 / 4
    assert toda_eigenvalue(build_cartan("A2"), WeightParam.symbolic(2)) == (l1 * l1 + l1 * l2 + l2 * l2 + 3 * l1 + 3 * l2 + 3) / 3


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3", "D4"])
def test_toda_identity(name):
    cd = build_cartan(name)
    w = WeightParam.symbolic(cd.rank)
    assert all(toda_eigen_identity(cd, w, beta) for beta in lattice_points(cd.size, 4))


def test_bump(a2):
    cd, w = a2
    t = PartitionTable(cd, w)
    for b1 in range(5):
        for b2 in range(5):
            assert t[(b1, b2)] == bump_closed_form(b1, b2, w)


def test_bump_specialized():
    w = WeightParam.specialized((Fraction(5, 3), Fraction(11, 2)))
    t = PartitionTable(build_cartan("A2"), w)
    assert t[(3, 2)] == bump_closed_form(3, 2, w)


def test_bump_needs_two_coordinates():
    with pytest.raises(DimensionMismatch):
        bump_closed_form(1, 1, (1, 2, 3))


def test_higher_recursions(a2):
    t = PartitionTable(*a2)
    for b1 in range(5):
        for b2 in range(5):
            assert a2_higher_recursion_check(t, b1, b2)


def test_combined_relation_opposite_sign_fails(a2):
    # the combination of the two higher recursions carries u2 Z_{b1-1,b2} - u1 Z_{b1,b2-1}
    cd, w = a2
    l1, l2 = w.lam
    t = PartitionTable(cd, w)
    b1, b2 = 2, 1
    u1, u2 = l1 + 1 - b1, l2 + 1 - b2
    lhs = (b1 - b2) * u1 * u2 * t[(b1, b2)]
    assert lhs == u2 * t[(b1 - 1, b2)] - u1 * t[(b1, b2 - 1)]
    assert lhs != u1 * t[(b1, b2 - 1)] - u2 * t[(b1 - 1, b2)]
    assert a2_higher_recursions(t, b1, b2)["combined"]


def test_third_order(a2):
    t = PartitionTable(*a2)
    for b1 in range(5):
        for b2 in range(5):
            assert third_order_coefficient_check(t, b1, b2)


def test_third_order_eigenvalue(l1, l2):
    e = (l1 * l1 + l1 * l2 + l2 * l2) / 3 + l1 + l2 + 1
    assert third_order_eigenvalue(WeightParam.symbolic(2)) == (l1 - l2) * e - (l1 - l2) ** 3 / 9
