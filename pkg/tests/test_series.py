import pytest
from hypothesis import given, strategies as st

from qpartitions.partitions import ClassSpec, count
from qpartitions.series import (FactorSpec, NonUnitConstantTerm, TruncatedSeries, UnsupportedClass,
                                class_genfun, class_genfun_two_forms, euler, inverse_pentagonal,
                                pentagonal, pochhammer_product, qpoch, theta_psi, theta_psi_product,
                                ts_invert, ts_mul)


def poly_product(factors, order):
    """Schoolbook expansion of a product of (1 + c q^e), used as an independent oracle."""
    out = [1] + [0] * order
    for c, e in factors:
        nxt = out[:]
        for i in range(order + 1 - e):
            nxt[i + e] += c * out[i]
        out = nxt
    return out


series_st = st.builds(
    lambda head, tail: TruncatedSeries([head] + tail),
    st.sampled_from([1, -1]),
    st.lists(st.integers(-5, 5), min_size=0, max_size=12),
)


def test_doubled_distinct_product_against_oracle():
    got = list(pochhammer_product([FactorSpec(2, 1, 1, +1)], 4))
    assert got == poly_product([(2, 1), (2, 2), (2, 3), (2, 4)], 4)
    assert got == [1, 2, 2, 6, 6]


def test_euler_function_coefficients():
    assert list(pentagonal(7)) == [1, -1, -1, 0, 0, 1, 0, 1]
    assert list(pochhammer_product([euler(1, +1)], 6)) == [1, 1, 1, 2, 2, 3, 4]
    assert list(inverse_pentagonal(10)) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_theta_psi_signs():
    # (-q)^T for T = 0, 1, 3, 6, 10
    assert list(theta_psi(-1, 10)) == [1, -1, 0, -1, 0, 0, 1, 0, 0, 0, 1]
    assert list(theta_psi(1, 6)) == [1, 1, 0, 1, 0, 0, 1]


@pytest.mark.parametrize("sign,order", [(1, 200), (-1, 100)])
def test_theta_psi_product_forms(sign, order):
    assert theta_psi(sign, order) == theta_psi_product(sign, order)


def test_pod_is_reciprocal_of_psi_minus_q():
    assert list(class_genfun(ClassSpec.pod(), 8)) == [1, 1, 1, 2, 3, 4, 5, 7, 10]


def test_invert_requires_unit():
    with pytest.raises(NonUnitConstantTerm):
        ts_invert(TruncatedSeries([2, 1]))
    with pytest.raises(NonUnitConstantTerm):
        TruncatedSeries([1, 1]).div_binomial(1, 0)


@given(series_st)
def test_invert_roundtrip(x):
    assert ts_mul(x, ts_invert(x)) == TruncatedSeries.one(x.order)


@given(series_st, series_st)
def test_mul_commutes_and_truncates_to_min_order(x, y):
    z = x * y
    assert z == y * x
    assert z.order == min(x.order, y.order)


@given(series_st, st.integers(-3, 3), st.integers(1, 6))
def test_binomial_multiply_matches_general_product(x, c, e):
    b = TruncatedSeries.monomial(c, e, x.order) + 1
    assert x.mul_binomial(c, e) == x * b
    assert x.mul_binomial(c, e).div_binomial(c, e) == x


def test_negative_power_and_division():
    x = pentagonal(20)
    assert x ** -1 == inverse_pentagonal(20)
    assert TruncatedSeries.one(20) / x == inverse_pentagonal(20)


def test_substitute_and_dilate():
    x = TruncatedSeries([1, 2, 3, 4, 5])
    assert list(x.substitute_neg_q()) == [1, -2, 3, -4, 5]
    assert list(x.dilate(2)) == [1, 0, 2, 0, 3]


def test_factor_count_limits_product():
    assert list(pochhammer_product([qpoch(1, 2, 2, count=1)], 5)) == [1, 0, -1, 0, 0, 0]


@pytest.mark.parametrize("c", [
    ClassSpec.modular(4), ClassSpec.modular(6), ClassSpec.congruent(4), ClassSpec.congruent(8),
    ClassSpec.duplicate(4), ClassSpec.duplicate(10), ClassSpec.congruent_distinct(4, 3),
    ClassSpec.eclass(6, 3), ClassSpec.pod(), ClassSpec.ped(), ClassSpec.unrestricted(),
    ClassSpec.two_part_duplicate4(),
])
def test_product_matches_enumeration(c):
    g = class_genfun(c, 24)
    assert [g[n] for n in range(25)] == [count(n, c) for n in range(25)]


def test_andrews_classes_have_no_product():
    with pytest.raises(UnsupportedClass):
        class_genfun(ClassSpec.vclass(3, 2), 10)


@pytest.mark.parametrize("s,t", [(4, 3), (4, 5), (6, 3), (8, 5), (10, 3)])
def test_congruent_distinct_two_forms(s, t):
    a, b = class_genfun_two_forms(s, t, 100)
    assert a == b


def test_two_part_duplicate_series():
    assert list(class_genfun(ClassSpec.two_part_duplicate4(), 8)) == [0, 0, 0, 1, 2, 2, 2, 3, 4]


def test_str():
    assert str(TruncatedSeries([1, 0, -2], 2)) == "1*q^0 + -2*q^2 + O(q^3)"
