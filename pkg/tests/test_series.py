from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdmod.rings import nilpotent_exp, projective_space
from qdmod.series import CohSeries, SeriesError, UniSeries, ZLaurent


def uni(coeffs, order=None):
    return UniSeries(order if order is not None else len(coeffs) - 1, [Fraction(c) for c in coeffs])


def test_simple_product_truncation():
    one_plus = uni([1, 1], 2)
    one_minus = uni([1, -1], 2)
    assert one_plus * one_minus == uni([1, 0, -1], 2)


def test_order_propagates_as_min():
    a = uni([1, 2, 3], 2)
    b = uni([1, 1], 1)
    assert (a * b).order == 1
    assert (a + b).order == 1


def test_exp_prefactor_product_is_identity():
    # multiplication by e^{H/z} then e^{-H/z} on a cohomology series
    alg = projective_space(4)
    h = alg.basis(1)

    def z_exp(sign):
        out = ZLaurent.constant(alg.one())
        power = alg.one()
        for m in range(1, alg.rank):
            power = power * h
            out = out + ZLaurent.monomial(power.scale(Fraction(sign**m, factorial(m))), -m)
        return out

    series = CohSeries(alg, 3, {0: ZLaurent.constant(alg.one()),
                                2: ZLaurent.monomial(alg.basis(2), -1)})
    forward = CohSeries(alg, 3, {0: z_exp(1)})
    backward = CohSeries(alg, 3, {0: z_exp(-1)})
    assert series * forward * backward == series


def quintic_g0(order):
    return UniSeries(order, [Fraction(factorial(5 * d), factorial(d) ** 5) for d in range(order + 1)])


def test_reciprocal_of_unit_series():
    g0 = quintic_g0(8)
    assert g0 * g0.reciprocal() == UniSeries.one(8)


def test_reciprocal_requires_unit():
    with pytest.raises(SeriesError):
        uni([0, 1]).reciprocal()


def test_exp_of_zero_and_log_mercator():
    assert uni([0, 0, 0]).exp() == UniSeries.one(2)
    mercator = uni([1, 1], 5).log()
    expected = UniSeries(5, [0] + [Fraction((-1) ** (d + 1), d) for d in range(1, 6)])
    assert mercator == expected


def test_exp_log_roundtrip():
    a = uni([0, 3, -2, 7, 1], 4)
    assert a.exp().log() == a


def test_revert_identity_and_catalan_signs():
    q = UniSeries.identity(6)
    assert q.revert() == q
    a = uni([0, 1, 1], 5)
    r = a.revert()
    # signed Catalan numbers
    assert list(r.coeffs[:5]) == [0, 1, -1, 2, -5]
    assert a.compose(r) == UniSeries.identity(5)


def test_revert_rejects_bad_leading_terms():
    with pytest.raises(SeriesError):
        uni([1, 1]).revert()
    with pytest.raises(SeriesError):
        uni([0, 0, 1]).revert()


def test_scale_q_and_shift():
    a = uni([0, 1, 2, 3], 3)
    assert a.scale_q(-1) == uni([0, -1, 2, -3], 3)
    assert a.shift(1).shift(-1) == a
    with pytest.raises(SeriesError):
        uni([1, 1]).shift(-1)


small_fraction = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
)


@settings(max_examples=50, deadline=None)
@given(st.lists(small_fraction, min_size=4, max_size=7),
       st.lists(small_fraction, min_size=4, max_size=7),
       st.lists(small_fraction, min_size=4, max_size=7))
def test_ring_laws_random(ca, cb, cc):
    order = min(len(ca), len(cb), len(cc)) - 1
    a, b, c = (UniSeries(order, v) for v in (ca, cb, cc))
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), min_size=3, max_size=6),
       st.integers(min_value=1, max_value=3))
def test_compose_revert_roundtrip_random(tail, lead):
    coeffs = [Fraction(0), Fraction(lead)] + list(tail)
    a = UniSeries(len(coeffs) - 1, coeffs)
    assert a.compose(a.revert()) == UniSeries.identity(a.order)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=3, max_size=6))
def test_exp_log_roundtrip_random(tail):
    a = UniSeries(len(tail), [Fraction(0)] + list(tail))
    assert a.exp().log() == a
