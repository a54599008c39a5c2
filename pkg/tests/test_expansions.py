import pytest
from hypothesis import given, settings, strategies as st

from qpartitions import expansions as ex
from qpartitions.checks import (JACOBI_DEFAULTS, ROGERS_FINE_DEFAULTS, check_alladi,
                                check_alladi_reduction, check_generalized_expansion)
from qpartitions.expansions import ArityMismatch, InvalidSpecialization, Monomial, WeightedSeries
from qpartitions.partitions import ClassSpec, alladi_weight_polynomials, refined_duplicate_counts
from qpartitions.series import class_genfun

ZB = ex.ZB


def test_product_of_binomials():
    w = WeightedSeries.one(ZB, 6).mul_binomial(1, (1, 1), 1).mul_binomial(-1, (1, 0), 2)
    assert w.rows() == [(0, (0, 0), 1), (1, (1, 1), 1), (2, (1, 0), -1), (3, (2, 1), -1)]
    assert w.div_binomial(-1, (1, 0), 2) == WeightedSeries.one(ZB, 6).mul_binomial(1, (1, 1), 1)


def test_arity_and_marker_errors():
    a = WeightedSeries.one(ZB, 3)
    b = WeightedSeries.one(("b", "c"), 3)
    with pytest.raises(ArityMismatch):
        a + b
    with pytest.raises(ArityMismatch):
        ex.ws_arith(a, b, "mul")
    with pytest.raises(ArityMismatch):
        WeightedSeries(ZB, [{(1,): 1}])
    with pytest.raises(ArityMismatch):
        a.specialize({"x": 2})
    with pytest.raises(InvalidSpecialization):
        a.div_binomial(1, (1, 0), 0)


poly = st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 6),
                          st.tuples(st.integers(0, 2), st.integers(0, 2))), max_size=5)


@settings(max_examples=60)
@given(poly, poly, st.integers(-2, 2), st.integers(-2, 2))
def test_specialization_is_a_ring_map(p, r, z, b):
    x, y = WeightedSeries.polynomial(ZB, 8, p), WeightedSeries.polynomial(ZB, 8, r)
    sub = {"z": z, "b": b}
    assert (x * y).specialize(sub) == x.specialize(sub) * y.specialize(sub)
    assert (x + y).specialize(sub) == x.specialize(sub) + y.specialize(sub)
    assert x.specialize({"z": z}).specialize({"b": b}) == x.specialize(sub)


@pytest.mark.parametrize("s", [4, 6, 8])
def test_refined_product_matches_enumeration(s):
    N = 18
    lhs = ex.duplicate_refined_lhs(s, N)
    for n in range(N + 1):
        assert dict(lhs.terms[n]) == refined_duplicate_counts(n, s)
    assert lhs.specialize({"z": 1, "b": 1}) == class_genfun(ClassSpec.duplicate(s), N)


def test_expansion_holds_for_s4():
    r = check_generalized_expansion(4, 30)
    assert r.ok, r.detail
    a = ex.duplicate_refined_rhs(4, 30, second_case_denominators="k")
    b = ex.duplicate_refined_rhs(4, 30, second_case_denominators="k-1")
    assert a == b


@pytest.mark.parametrize("s", [6, 8])
def test_expansion_breaks_above_s4(s):
    # the partition 2,1 (weight 3, two parts, both not multiples of s/2)
    # is missing from the right-hand side
    lhs = ex.duplicate_refined_lhs(s, 12)
    rhs = ex.duplicate_refined_rhs(s, 12)
    assert lhs.first_difference(rhs) == (3, (2, 2), 1, 0)
    assert not check_generalized_expansion(s, 12).ok


def test_expansion_s6_has_impossible_monomial():
    # z b^2: more marked parts than parts
    rhs = ex.duplicate_refined_rhs(6, 12)
    assert rhs.coefficient(6, (1, 2)) == 1
    assert all(l <= r for n in range(13) for r, l in refined_duplicate_counts(n, 6))


def test_alladi_sides_and_polynomials():
    assert check_alladi(30, 20).ok
    assert alladi_weight_polynomials(6) == ((0, 1, 2, 1), (0, 1, 2, 1))
    assert alladi_weight_polynomials(0) == ((1,), (1,))


def test_alladi_reduction_from_s4():
    assert check_alladi_reduction(30).ok
    with pytest.raises(InvalidSpecialization):
        ex.to_alladi_markers(WeightedSeries.monomial(ZB, 2, 1, 1, (0, 1)))


def test_monomial_parse_and_print():
    for text, m in [("3", Monomial(3, 0)), ("q", Monomial(1, 1)), ("-2q^3", Monomial(-2, 3)),
                    ("-q^2", Monomial(-1, 2))]:
        assert Monomial.parse(text) == m
        assert Monomial.parse(str(m)) == m
    with pytest.raises(ValueError):
        Monomial.parse("qx")
    with pytest.raises(ValueError):
        Monomial(1, -1)


@pytest.mark.parametrize("which,order", [("gauss", 200), ("pentagonal", 200),
                                         ("lebesgue", 40), ("sylvester", 40)])
def test_parameter_free_identities(which, order):
    lhs, rhs = ex.classical_identity_sides(which, [], order)
    assert lhs == rhs


def test_lebesgue_and_sylvester_reductions():
    l, _ = ex.lebesgue_sides(40)
    assert l.specialize({"b": -1}) == ex.gauss_sides(40)[1]
    _, r = ex.sylvester_sides(40)
    assert r.specialize({"b": -1}) == ex.pentagonal_sides(40)[1]


@pytest.mark.parametrize("params", ROGERS_FINE_DEFAULTS + [(Monomial(2, 0), Monomial(-1, 1), Monomial(1, 3))])
def test_rogers_fine(params):
    lhs, rhs = ex.rogers_fine_sides(*params, 50)
    assert lhs == rhs


@pytest.mark.parametrize("params", JACOBI_DEFAULTS)
def test_jacobi(params):
    lhs, rhs = ex.jacobi_triple_sides(*params, 50)
    assert lhs == rhs


def test_identity_parameter_errors():
    with pytest.raises(InvalidSpecialization):
        ex.classical_identity_sides("jacobi", [Monomial(1, 1)], 10)
    with pytest.raises(InvalidSpecialization):
        ex.rogers_fine_sides(Monomial(1, 0), Monomial(1, 0), Monomial(1, 0), 10)
    with pytest.raises(InvalidSpecialization):
        ex.jacobi_triple_sides(Monomial(1, 0), Monomial(1, 1), 10)
    with pytest.raises(ValueError):
        ex.classical_identity_sides("ramanujan", [], 10)
