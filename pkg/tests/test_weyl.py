from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdmod.laplace import LaplaceError, TwistedSection, quintic_solution
from qdmod.polymat import MPoly
from qdmod.rings import projective_space
from qdmod.weyl import (
    WeylOp,
    annihilate_check,
    build_quintic_ops,
    factorization_report,
    intertwiner_check,
    sigma_family_operator,
    sigma_specialization_report,
)


def test_defining_commutation_relation():
    dt = WeylOp.dt()
    q = WeylOp.const(MPoly.var_q())
    assert dt * q == q * dt + q


def test_negative_power_commutation():
    dt = WeylOp.dt()
    qinv = WeylOp.const(MPoly.monomial(1, -1, 0))
    assert dt * qinv == qinv * dt - qinv


def test_x_is_central():
    xdt = WeylOp({1: MPoly.var_x()})
    fifth = xdt * xdt * xdt * xdt * xdt
    assert fifth == WeylOp({5: MPoly.monomial(1, 0, 5)})


def test_quintic_factorizations():
    report = factorization_report()
    assert report["eu_factorization"]
    assert report["loc_factorization"]


def test_leading_coefficient_of_annihilator():
    ops = build_quintic_ops()
    assert ops["D_eu"].coefficient(5) == MPoly.monomial(1, 0, 5) - MPoly.monomial(3125, 1, 0)
    assert ops["D_loc"].coefficient(5) == ops["D_eu"].coefficient(5)


def test_intertwiner_identity():
    report = intertwiner_check()
    assert report["passed"]
    assert report["lhs_degree"] == report["rhs_degree"] == 10
    # both top coefficients carry the x^5/q monomial with unit coefficient
    ops = build_quintic_ops()
    qinv = WeylOp.const(MPoly.monomial(1, -1, 0))
    lhs = ops["D_eu"] * qinv * WeylOp.dt(5)
    rhs = WeylOp.dt(5) * qinv * ops["D_loc"]
    assert lhs.coefficient(10).terms[(-1, 5, 0)] == 1
    assert rhs.coefficient(10).terms[(-1, 5, 0)] == 1
    assert lhs.coefficient(10) == rhs.coefficient(10)


def test_sigma_family_specializes():
    report = sigma_specialization_report()
    assert report["eu"] and report["loc"]
    family = sigma_family_operator(4)
    assert family.coefficient(5) == MPoly.monomial(1, 0, 5) - MPoly.monomial(3125, 1, 0)


def test_annihilation_of_explicit_solutions():
    ops = build_quintic_ops()
    phi_eu = quintic_solution("eu", 10)
    phi_loc = quintic_solution("loc", 10)
    assert annihilate_check(ops["D_eu"], phi_eu, 10)["passed"]
    assert annihilate_check(ops["D_loc"], phi_loc, 10)["passed"]


def test_cross_annihilation_fails_at_degree_one():
    ops = build_quintic_ops()
    phi_loc = quintic_solution("loc", 3)
    report = annihilate_check(ops["D_eu"], phi_loc, 3)
    assert not report["passed"]
    first_bad = min(key[0][0] for key in report["offending"])
    assert first_bad == 1


def test_sigma_operator_annihilates_matching_columns():
    # the symbolic family, specialized to the two production parameters,
    # annihilates the corresponding solution columns
    family = sigma_family_operator(4)
    phi_eu = quintic_solution("eu", 6)
    assert annihilate_check(family.substitute_s(Fraction(5, 2)), phi_eu, 6)["passed"]


def test_q_inverse_refused_on_sections():
    alg = projective_space(4)
    op = WeylOp.const(MPoly.monomial(1, -1, 0))
    sec = TwistedSection.single(alg, 0, Fraction(0), 0, alg.one())
    with pytest.raises(LaplaceError):
        op.apply(sec, 3)


operator_strategy = st.lists(
    st.tuples(
        st.integers(min_value=0, max_value=3),
        st.integers(min_value=-2, max_value=2),
        st.integers(min_value=0, max_value=2),
        st.integers(min_value=-5, max_value=5),
    ),
    min_size=1,
    max_size=3,
).map(
    lambda rows: WeylOp(
        {p: MPoly.monomial(c if c else 1, a, b) for p, a, b, c in rows}
    )
)


@settings(max_examples=100, deadline=None)
@given(operator_strategy, operator_strategy, operator_strategy)
def test_normal_ordering_associative(a, b, c):
    assert (a * b) * c == a * (b * c)
