from fractions import Fraction
from math import factorial

from qdmod.jfunction import descendants_cached
from qdmod.mirror import (
    SeriesMat,
    i_function,
    i_matrix,
    lu_factorize,
    lu_roundtrip_ok,
    lu_triangularity_report,
    mirror_compatibility_residual,
    mirror_maps,
    pairing_identity_check,
)
from qdmod.rings import projective_space
from qdmod.series import UniSeries, ZLaurent

# published quintic tables (frozen)
N_TABLE = {
    1: Fraction(-650),
    2: Fraction(-160625),
    3: Fraction(-337216250, 3),
    4: Fraction(-217998840625, 2),
    5: Fraction(-125251505498880),
    6: Fraction(-479299410776921825, 3),
    7: Fraction(-1531227197616745455000, 7),
    8: Fraction(-1260949629604284268280625, 4),
}
M_EU = [0, 1, 770, 1014275, 1703916750, 3286569025625]
M_LOC = [0, 1, -120, 63900, -63148000, 85136103750]
F_BAR = [0, 1, -650, 50625, -53770000, -49529975000]


def test_local_i_function_degree_zero_slots():
    for alpha in range(5):
        col = i_function("loc", 4, alpha, 2)
        assert col.slot(0) == ZLaurent.constant(projective_space(4).basis(alpha))


def test_eu_scalar_part_is_hypergeometric():
    # z^0 part of the alpha=0 column is sum_d (5d)!/(d!)^5 q^d
    col = i_function("eu", 4, 0, 6)
    f = col.scalar_part(0, 0)
    oracle = UniSeries(6, [Fraction(factorial(5 * d), factorial(d) ** 5) for d in range(7)])
    assert f == oracle
    assert f[1] == 120 and f[2] == 113400


def test_loc_z_inverse_part_alternating():
    # H-coefficient of the z^{-1} part: 5 sum (-1)^d (5d-1)!/(d!)^5 q^d
    col = i_function("loc", 4, 0, 5)
    g2 = col.scalar_part(1, -1)
    oracle = UniSeries(
        5,
        [Fraction(0)]
        + [
            Fraction(5 * (-1) ** d * factorial(5 * d - 1), factorial(d) ** 5)
            for d in range(1, 6)
        ],
    )
    assert g2 == oracle
    assert g2[1] == -120


def test_mirror_maps_published_lists():
    pair = mirror_maps(4, 10)
    for d in range(1, 6):
        assert pair.m_eu[d] == M_EU[d]
        assert pair.m_loc[d] == M_LOC[d]
        assert pair.f_bar[d] == F_BAR[d]
    for d in range(1, 9):
        assert pair.n_table[d] == N_TABLE[d]


def test_exponentiated_map_leading_terms():
    pair = mirror_maps(4, 4)
    assert pair.m_eu[0] == 0 and pair.m_eu[1] == 1
    assert pair.m_loc[0] == 0 and pair.m_loc[1] == 1
    assert pair.f_bar[0] == 0 and pair.f_bar[1] == 1


def test_integrality_to_order_ten():
    pair = mirror_maps(4, 10)
    flags = pair.integrality()
    assert flags["m_eu"] and flags["m_loc"] and flags["f_bar"]


def test_mirror_compatibility():
    pair = mirror_maps(4, 8)
    assert mirror_compatibility_residual(pair).is_zero()


def test_lu_roundtrip_and_shape():
    data = descendants_cached(4, 5)
    for kind in ("eu", "loc"):
        result = lu_factorize(i_matrix(kind, 4, 5, data))
        assert lu_roundtrip_ok(result)
        shape = lu_triangularity_report(result, 4)
        assert shape["linv_strictly_lower"]
        assert shape["v_polynomial_upper"]
        assert shape["homogeneous"]


def test_lu_classical_limit_is_identity():
    result = lu_factorize(i_matrix("eu", 4, 3))
    idmat = SeriesMat.identity(5, 3)
    assert result["Linv"].q_slice(0) == idmat
    assert result["V"].q_slice(0) == idmat


def test_v_column_zero_is_scalar():
    # homogeneity forces the first upper factor column to be F(q) T_0
    result = lu_factorize(i_matrix("eu", 4, 5))
    alg = projective_space(4)
    col0 = result["V"].columns(alg)[0]
    f = i_function("eu", 4, 0, 5).scalar_part(0, 0)
    for d in range(6):
        lau = col0.slot(d)
        for zexp, elem in lau.coeffs.items():
            assert zexp == 0
            assert not any(elem.coeffs[1:])
            assert elem.coeffs[0] == f[d]


def test_pairing_identity_p4():
    report = pairing_identity_check(4, 6)
    assert report["passed"]
    assert report["left_q_independent"]
    assert report["offending"] == []


def test_pairing_identity_even_dimension():
    # n + 1 even: the coordinate shift acts trivially on q
    report = pairing_identity_check(3, 4)
    assert report["passed"]
