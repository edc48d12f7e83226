from fractions import Fraction

from qdmod.connection import (
    delta,
    delta_intertwining_residual,
    delta_total,
    delta_total_rank,
    euler_mult_matrix,
    flatness_commutator,
    h_mult_matrix,
    metric_flatness_residual,
    mu_shift_matrix,
    quintic_reference_connection,
    resolvent,
    rho_mult_rank,
    second_metric,
    sigma_divisor,
    ssc_connection,
)
from qdmod.polymat import MPoly, RatMat, poly_det
from qdmod.rings import projective_space

HALF = Fraction(1, 2)


def test_h_matrix_layout():
    mat = h_mult_matrix(4)
    assert mat.nums[0][4] == MPoly.var_q()
    for a in range(4):
        assert mat.nums[a + 1][a] == MPoly.const(1)
        assert mat.nums[a][a].is_zero()


def test_euler_determinant():
    for n in (2, 3, 4):
        e = euler_mult_matrix(n)
        xid = RatMat.diagonal([MPoly.var_x()] * (n + 1))
        det = poly_det((e - xid).nums)
        sign = Fraction((-1) ** n)
        assert det == sigma_divisor(n) * MPoly.const(sign)


def test_determinant_classical_limit():
    e = euler_mult_matrix(4)
    xid = RatMat.diagonal([MPoly.var_x()] * 5)
    det = poly_det((e - xid).nums).eval_q0()
    assert det == MPoly.monomial(-1, 0, 5)


def test_connection_matches_published_display():
    for sigma in (Fraction(5, 2), Fraction(-5, 2), Fraction(3, 2), Fraction(-1, 2)):
        gen = ssc_connection(sigma, 4)
        ref = quintic_reference_connection(sigma)
        assert gen["A_t"] == ref["A_t"]
        assert gen["A_x"] == ref["A_x"]


def test_classical_limit_geometric_series_oracle():
    # at q = 0 the resolvent is -sum_i (n+1)^i H^i x^{-i-1}; cross-check the
    # adjugate inverse against the truncated geometric series
    n = 4
    sigma = Fraction(7, 3)
    a_x = ssc_connection(sigma, n)["A_x"]
    alg = projective_space(n)
    size = n + 1
    # build -(mu - 1/2 - sigma) * (-sum_i 5^i H^i x^{-i-1}) with x cleared
    # to the common denominator x^5
    entries = [[MPoly() for _ in range(size)] for _ in range(size)]
    for i in range(size):
        for beta in range(size - i):
            coeff = -(alg.mu_eigenvalue(beta + i) - HALF - sigma) * (-(5**i))
            entries[beta + i][beta] = entries[beta + i][beta] + MPoly.monomial(
                coeff, 0, size - i - 1
            )
    oracle = RatMat(entries, MPoly.monomial(1, 0, size))
    cleared = RatMat(
        [[p.eval_q0() for p in row] for row in a_x.nums], a_x.den.eval_q0()
    )
    assert cleared == oracle


def test_flatness_spectrum_and_random():
    sigmas = [Fraction(k, 2) for k in (5, 3, 1, -1, -3, -5)]
    sigmas += [Fraction(7, 3), Fraction(-11, 4), Fraction(13, 5)]
    for sigma in sigmas:
        assert flatness_commutator(sigma, 4).is_zero()


def test_flatness_other_dimension():
    assert flatness_commutator(Fraction(2), 2).is_zero()


def test_second_metric_values_at_large_radius():
    # at q=0, x=1 the metric is minus the integral of rho^{4-|a|-|b|} T_a T_b
    n = 4
    gram = second_metric(n)
    alg = projective_space(n)
    rho = alg.basis(1).scale(Fraction(n + 1))
    for a in range(5):
        for b in range(5):
            num = gram.nums[a][b].substitute(q=0, x=1)
            den = gram.den.substitute(q=0, x=1)
            value = num / den
            if a + b <= n:
                expected = -(rho.power(n - a - b) * alg.basis(a) * alg.basis(b)).integrate()
            else:
                expected = 0
            assert value == expected
    assert gram.nums[0][0].substitute(q=0, x=1) / gram.den.substitute(q=0, x=1) == -625


def test_second_metric_symmetric_and_denominator():
    gram = second_metric(4)
    assert gram == gram.transpose()
    # entries share the divisor polynomial as denominator
    det = poly_det((euler_mult_matrix(4) - RatMat.diagonal([MPoly.var_x()] * 5)).nums)
    assert gram.den == det or gram.den == -det


def test_second_metric_flatness():
    for sigma in (Fraction(5, 2), Fraction(1, 2), Fraction(-7, 6)):
        res = metric_flatness_residual(sigma, 4)
        assert res["t"].is_zero()
        assert res["x"].is_zero()


def test_delta_intertwining_exact():
    sigma = Fraction(3, 2)
    while sigma >= Fraction(-5, 2):
        res = delta_intertwining_residual(sigma, 4)
        assert res["t"].is_zero()
        assert res["x"].is_zero()
        sigma -= 1
    res = delta_intertwining_residual(Fraction(9, 7), 4)
    assert res["t"].is_zero() and res["x"].is_zero()


def test_delta_total_rank_equals_rho_rank():
    assert delta_total_rank(4) == 4 == rho_mult_rank(4)
    assert delta_total_rank(2) == 2 == rho_mult_rank(2)


def test_delta_invertible_away_from_spectrum():
    num, _den = delta(Fraction(7, 2), 4).det()
    assert not num.is_zero()


def test_delta_total_drops_rank():
    num, _den = delta_total(4).det()
    assert num.is_zero()


def test_mu_shift_kills_one_eigenvalue_inside_spectrum():
    mat = mu_shift_matrix(4, Fraction(-5, 2))
    assert mat.nums[0][0].is_zero()
    assert not mat.nums[1][1].is_zero()


def test_resolvent_inverse_roundtrip():
    n = 3
    e = euler_mult_matrix(n)
    xid = RatMat.diagonal([MPoly.var_x()] * (n + 1))
    assert (e - xid) * resolvent(n) == RatMat.identity(n + 1)
