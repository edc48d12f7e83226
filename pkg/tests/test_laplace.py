import random
from fractions import Fraction

import pytest

from qdmod.laplace import (
    LaplaceError,
    LaurentSection,
    TwistedSection,
    check_prop_admissible,
    expand_nilpotent_exponent,
    fl_rule_residuals,
    gamma_ratio,
    kcheck_column,
    kcheck_delta_consistency,
    kcheck_family,
    ksection_z,
    quintic_solution,
    verify_flat_section,
    verify_ssc_solution,
)
from qdmod.rings import invert_unit, projective_space
from qdmod.scalars import PiConst


def alg4():
    return projective_space(4)


def rho4():
    return alg4().basis(1).scale(Fraction(5))


def test_gamma_ratio_middle_case_is_one():
    # a term z^{-gamma-(ell-1)} transforms with ratio exactly 1
    assert gamma_ratio(rho4(), Fraction(0), Fraction(1)) == alg4().one()


def test_gamma_ratio_rising_product():
    ratio = gamma_ratio(rho4(), Fraction(4), Fraction(1))
    expected = alg4().one()
    for k in (1, 2, 3, 4):
        expected = expected * (rho4() + alg4().scalar(Fraction(k)))
    assert ratio == expected


def test_gamma_ratio_inverse_case():
    ratio = gamma_ratio(rho4(), Fraction(-5), Fraction(0))
    expected = alg4().one()
    for k in (-4, -3, -2, -1):
        expected = expected * invert_unit(rho4() + alg4().scalar(Fraction(k)))
    assert ratio == expected


def test_gamma_ratio_pole_rejected():
    with pytest.raises(LaplaceError):
        gamma_ratio(rho4(), Fraction(-2), Fraction(1))


def test_single_term_middle_case_transform():
    alg = alg4()
    section = LaurentSection(alg, rho4(), {(0, Fraction(0)): alg.basis(2)})
    image = section.truncated_laplace(1)
    expected = expand_nilpotent_exponent(alg, 0, Fraction(1), rho4(), alg.basis(2))
    assert image == expected


def test_quintic_eu_leading_term():
    # degree-0 term of the Euler-side solution: x^{-5H-5} (5H+1)..(5H+4)
    phi = quintic_solution("eu", 2)
    alg = alg4()
    product = alg.one()
    for k in (1, 2, 3, 4):
        product = product * (rho4() + alg.scalar(Fraction(k)))
    expected = expand_nilpotent_exponent(alg, 0, Fraction(5), rho4(), product)
    d0 = TwistedSection(alg, {k: v for k, v in phi.terms.items() if k[0] == 0})
    assert d0 == expected


def test_quintic_loc_prefactor_term():
    # degree-0 term of the local solution: e^{5 Pi H} x^{-5H}
    phi = quintic_solution("loc", 1)
    d0 = TwistedSection(alg4(), {k: v for k, v in phi.terms.items() if k[0] == 0})
    # (e, m) = (0, 0): the prefactor itself, 1 + 5 Pi H + (5 Pi)^2 H^2/2 + ...
    unit_term = d0.terms[(0, Fraction(0), 0)]
    assert unit_term.coeffs[0] == 1
    assert unit_term.coeffs[1] == PiConst({1: Fraction(5)})
    assert unit_term.coeffs[2] == PiConst({2: Fraction(25, 2)})
    # (e, m) = (0, 1): the -5H log-expansion term times the prefactor
    m1 = d0.terms[(0, Fraction(0), 1)]
    assert not m1.coeffs[0]
    assert m1.coeffs[1] == -5
    assert m1.coeffs[2] == PiConst({1: Fraction(-25)})


def test_top_column_single_term():
    # alpha = n, d = 0: nilpotency kills all corrections
    col = kcheck_column(Fraction(5, 2), 1, 4, 4, 0)
    alg = alg4()
    assert col.terms == {(0, Fraction(1), 0): alg.basis(4)}


def test_fl_rules_on_random_admissible_inputs():
    alg = alg4()
    rng = random.Random(7)
    for trial in range(20):
        ell = Fraction(rng.randint(-2, 2))
        terms = {}
        for _ in range(rng.randint(1, 4)):
            d = rng.randint(0, 3)
            k = ell + rng.randint(1, 5)  # keep every k >= ell: admissible
            coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(5)]
            elem = alg.element(coeffs)
            if (d, k) in terms:
                continue
            terms[(d, k)] = elem
        section = LaurentSection(alg, rho4(), terms)
        residuals = fl_rule_residuals(section, ell)
        assert residuals["z_inverse_rule"].is_zero()
        assert residuals["derivative_rule"].is_zero()


def test_admissibility_rejections():
    alg = alg4()
    with pytest.raises(LaplaceError):
        # 0 inside {k0+1, ..., ell-1}
        LaurentSection(alg, rho4(), {(0, Fraction(-3)): alg.one()}).truncated_laplace(2)
    with pytest.raises(LaplaceError):
        # non-integral ell - k0
        LaurentSection(alg, rho4(), {(0, Fraction(1, 2)): alg.one()}).truncated_laplace(1)
    with pytest.raises(LaplaceError):
        check_prop_admissible(Fraction(3, 2), 1, 4)
    # the two production pairs are admissible
    check_prop_admissible(Fraction(5, 2), 1, 4)
    check_prop_admissible(Fraction(-5, 2), 0, 4)


def test_solution_families_to_w8():
    for sigma, ell in ((Fraction(5, 2), 1), (Fraction(-5, 2), 0)):
        cols = kcheck_family(sigma, ell, 4, 8)
        report = verify_ssc_solution(cols, sigma, 4, 8)
        assert report["passed"], report["offending"]


def test_solution_family_p3():
    cols = kcheck_family(Fraction(2), 1, 3, 5)
    report = verify_ssc_solution(cols, Fraction(2), 3, 5)
    assert report["passed"]


def test_constant_section_negative_control():
    alg = alg4()
    const = TwistedSection.single(alg, 0, Fraction(0), 0, alg.one())
    report = verify_flat_section(const, Fraction(-5, 2), 4, 4)
    assert not report["passed"]
    assert not report["residual_x"].is_zero()


def test_kcheck_shift_relation():
    # d/dx of the ell = 0 column equals minus the column at sigma + 1
    for alpha in range(5):
        lower = kcheck_column(Fraction(-5, 2), 0, alpha, 4, 4)
        upper = kcheck_column(Fraction(-3, 2), 0, alpha, 4, 4)
        assert lower.dx() == -upper


def test_kcheck_delta_consistency_w6():
    report = kcheck_delta_consistency(4, 6)
    assert report["passed"], report["offending"]


def test_ksection_z_shape():
    sec = ksection_z(Fraction(3, 2), 1, 4, 3)
    ks = sec.exponents()
    assert ks[0] == Fraction(5 * 0 - 1) + Fraction(5, 2) + Fraction(3, 2)
    assert all((k - ks[0]) % 5 == 0 for k in ks)
