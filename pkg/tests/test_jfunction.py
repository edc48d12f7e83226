from fractions import Fraction

import pytest

from qdmod.jfunction import (
    HomogeneityError,
    descendant_closed_form,
    descendants_from_dict,
    descendants_to_dict,
    dt_stripped,
    extract_descendants,
    fundsol_columns,
    j_function,
    quantum_de_check,
)
from qdmod.rings import projective_space
from qdmod.series import ZLaurent


def test_degree_zero_slot_is_one():
    series = j_function(4, 3)
    alg = series.algebra
    assert series.slot(0) == ZLaurent.constant(alg.one())


def test_p4_degree_one_slot_binomials():
    # (H + z)^{-5} = z^{-5}(1 - 5H/z + 15H^2/z^2 - 35H^3/z^3 + 70H^4/z^4)
    series = j_function(4, 1)
    slot = series.slot(1)
    expected = {-5: 1, -6: -5, -7: 15, -8: -35, -9: 70}
    for zexp, coeff in expected.items():
        elem = slot.coefficient(zexp)
        power = -zexp - 5
        assert elem.coeffs[power] == coeff
        assert sum(1 for c in elem.coeffs if c) == 1


def test_quantum_differential_equation():
    # (z d/dt)^{n+1} - q annihilates the series; the slotwise recursion is
    # the independent hypergeometric oracle
    assert quantum_de_check(4, 6)
    assert quantum_de_check(2, 5)
    assert quantum_de_check(1, 7)


def test_fundsol_column_zero_is_j():
    cols = fundsol_columns(4, 4)
    assert cols[0] == j_function(4, 4)


def test_fundsol_classical_limit():
    cols = fundsol_columns(4, 3)
    alg = cols[0].algebra
    for k in range(5):
        assert cols[k].slot(0) == ZLaurent.constant(alg.basis(k))


def test_fundsol_top_column_degree_one():
    # slot d=1 of column 4 is (H+z)^4 (H+z)^{-5} = (H+z)^{-1}
    cols = fundsol_columns(4, 1)
    slot = cols[4].slot(1)
    oracle = descendant_closed_form(4, 4, 1)
    assert slot == oracle
    expected = {-1: (0, 1), -2: (1, -1), -3: (2, 1), -4: (3, -1), -5: (4, 1)}
    for zexp, (power, coeff) in expected.items():
        assert slot.coefficient(zexp).coeffs[power] == coeff


def test_descendant_degree_zero():
    data = extract_descendants(4, 2)
    alg = data.algebra
    for alpha in range(5):
        assert data.n_poly(alpha, 0) == ZLaurent.constant(alg.basis(alpha))


def test_descendant_at_one_value():
    data = extract_descendants(4, 2)
    value = data.n_at_one(0, 1)
    assert [int(c) for c in value.coeffs] == [1, -5, 15, -35, 70]


def test_descendants_match_closed_form():
    data = extract_descendants(4, 4)
    for alpha in range(5):
        for d in range(5):
            assert data.n_poly(alpha, d) == descendant_closed_form(4, alpha, d)


def test_homogeneity_exponent_concentration():
    # the H^beta component of N_{alpha,d}(z) sits at z^{alpha-beta-(n+1)d}
    data = extract_descendants(3, 5)
    for alpha in range(4):
        for d in range(6):
            for zexp, elem in data.n_poly(alpha, d).coeffs.items():
                for beta, c in enumerate(elem.coeffs):
                    if c:
                        assert zexp == alpha - beta - 4 * d


def test_homogeneity_violation_detected():
    data = extract_descendants(2, 2)
    table = [[data.n_poly(a, d) for d in range(3)] for a in range(3)]
    alg = data.algebra
    table[0][1] = table[0][1] + ZLaurent.monomial(alg.basis(1), 17)
    from qdmod.jfunction import DescendantData

    with pytest.raises(HomogeneityError):
        DescendantData(alg, 2, table)


def test_descendant_json_roundtrip():
    data = extract_descendants(2, 3)
    packed = descendants_to_dict(data)
    back = descendants_from_dict(projective_space(2), packed)
    for alpha in range(3):
        for d in range(4):
            assert back.n_poly(alpha, d) == data.n_poly(alpha, d)


def test_dt_operator_derivation_part():
    # the stripped operator is H + z q d/dq; the z q d/dq part alone is a
    # derivation of the series product
    a = j_function(3, 3)
    h = a.algebra.basis(1)

    def zqdq(series):
        return dt_stripped(series) - series.elem_mul(h)

    lhs = zqdq(a * a)
    rhs = zqdq(a) * a + a * zqdq(a)
    assert lhs == rhs
