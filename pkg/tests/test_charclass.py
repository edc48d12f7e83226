from fractions import Fraction

from qdmod.charclass import (
    EULER_GAMMA,
    euler_pairing,
    euler_pairing_binomial,
    gamma_class,
    identity_53,
    selfintersection_check,
)
from qdmod.rings import chern_data, projective_space


def test_gamma_class_degree_zero():
    for n in (1, 3, 4):
        assert abs(gamma_class(n).coeffs[0] - 1) < 1e-14


def test_gamma_class_p1_linear_coefficient():
    value = gamma_class(1).coeffs[1]
    assert abs(value - (-2 * EULER_GAMMA)) < 1e-12
    assert abs(value.real + 1.1544313298) < 1e-9


def test_gamma_todd_identity_range():
    for n in range(1, 9):
        report = identity_53(n, 1e-10)
        assert report["passed"], (n, report)


def test_gamma_todd_identity_p1_explicit():
    # left side is 1 + H, the Todd class of the projective line
    report = identity_53(1, 1e-10)
    assert report["passed"]
    todd = chern_data(1)["todd"]
    assert todd == projective_space(1).one() + projective_space(1).basis(1)


def test_euler_pairing_values():
    assert euler_pairing(0, 0, 3) == 1
    assert euler_pairing(1, 0, 4) == 5
    assert euler_pairing(-1, 0, 4) == 0


def test_euler_pairing_binomial_agreement():
    for n in (2, 4):
        for diff in range(-n, 11):
            assert euler_pairing(diff, 0, n) == euler_pairing_binomial(diff, 0, n)


def test_euler_pairing_depends_on_difference_only():
    assert euler_pairing(7, 3, 4) == euler_pairing(4, 0, 4) == euler_pairing(5, 1, 4)


def test_selfintersection_cases():
    for k in (0, 1, 5):
        report = selfintersection_check(k, 4)
        assert report["passed"], report


def test_selfintersection_explicit_k5():
    # ch(O) - ch(O(-5)) coincides with 5H * Td(O(5))^{-1} in the ring
    alg = projective_space(4)
    data = chern_data(4)
    lhs = alg.one() - data["ch_line"](-5)
    h = alg.basis(1)
    inv_todd = alg.zero()
    from math import factorial

    for j in range(alg.rank):
        inv_todd = inv_todd + alg.basis(j).scale(Fraction((-1) ** j * 5**j, factorial(j + 1)))
    assert lhs == h.scale(Fraction(5)) * inv_todd


def test_exact_mode_is_rational():
    value = euler_pairing(3, 1, 4)
    assert isinstance(value, Fraction)
    assert value == euler_pairing_binomial(3, 1, 4)
