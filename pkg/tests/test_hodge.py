from fractions import Fraction

from qdmod.hodge import (
    FiltrationSpan,
    entry_q0_matches,
    feu_filtration,
    floc_filtration,
    griffiths_report,
    kcheck_ttilde,
    orthogonality_involution_report,
    spans_equal,
    ttilde_generator,
    ttilde_iterates,
)
from qdmod.polymat import MPoly

# x-power tables of the deep Euler generator and its covariant
# x-derivatives at q = 0 (frozen reference data)
TTILDE_TABLE = [
    [(Fraction(1), 0), (Fraction(-125, 3), 1), (Fraction(2125, 3), 2), (Fraction(-5625), 3), (Fraction(15000), 4)],
    [(Fraction(-5), 1), (Fraction(565, 3), 2), (Fraction(-8975, 3), 3), (Fraction(22875), 4), (Fraction(-60000), 5)],
    [(Fraction(30), 2), (Fraction(-1030), 3), (Fraction(15500), 4), (Fraction(-115500), 5), (Fraction(300000), 6)],
    [(Fraction(-210), 3), (Fraction(6610), 4), (Fraction(-95300), 5), (Fraction(697500), 6), (Fraction(-1800000), 7)],
    [(Fraction(1680), 4), (Fraction(-48680), 5), (Fraction(679000), 6), (Fraction(-4905000), 7), (Fraction(12600000), 8)],
]


def test_floc_ranks():
    spans = floc_filtration(4)
    assert [s.rank() for s in spans] == [5, 4, 3, 2, 1]


def test_floc_deepest_level_is_unit_line():
    spans = floc_filtration(4)
    gens = spans[4].generators
    assert len(gens) == 1
    expected = [MPoly.const(int(i == 0)) for i in range(5)]
    assert gens[0] == expected


def test_floc_level_one_matches_derivative_chain():
    # rank 4, spanned by the first four covariant derivatives of the unit
    spans = floc_filtration(4)
    level1 = spans[1]
    assert level1.rank() == 4
    from qdmod.connection import ssc_connection
    from qdmod.hodge import nabla_apply

    conn = ssc_connection(Fraction(-5, 2), 4)["A_x"]
    vec = [MPoly.const(int(i == 0)) for i in range(5)]
    den = MPoly.const(1)
    chain = [list(vec)]
    for _ in range(3):
        vec, den = nabla_apply(vec, den, conn, "x")
        chain.append(list(vec))
    assert spans_equal(level1, FiltrationSpan(1, chain))


def test_feu_ranks():
    spans = feu_filtration(4)
    assert [s.rank() for s in spans] == [5, 4, 3, 2, 1]


def test_ttilde_published_table():
    chain = ttilde_iterates(4)
    for k, (vec, den) in enumerate(chain):
        for beta, (coeff, xpow) in enumerate(TTILDE_TABLE[k]):
            assert entry_q0_matches(vec[beta], den, coeff, xpow), (k, beta)


def test_ttilde_q_dependence_is_reported_not_hidden():
    # the full rational-function generator may carry q-dependence beyond
    # the q^0 data; the engine exposes the full numerators
    vec, den = ttilde_generator(4)
    has_q = any(key[0] for p in vec for key in p.terms) or any(
        key[0] for key in den.terms
    )
    # whichever way this comes out, the q^0 comparison above is the
    # normative check; here we only assert the computation is total
    assert isinstance(has_q, bool)


def test_griffiths_transversality():
    report = griffiths_report(4)
    assert report["loc"] and report["eu"]


def test_griffiths_transversality_p2():
    report = griffiths_report(2)
    assert report["loc"] and report["eu"]


def test_orthogonality_involution():
    report = orthogonality_involution_report(4)
    assert report["involution"]
    assert report["dimensions"]


def test_kcheck_ttilde_constant_is_computed():
    report = kcheck_ttilde(6)
    assert report["identity_holds"]
    assert report["constant"] == 24
    assert report["passed"]


def test_kcheck_ttilde_scaling_control():
    # replacing the computed constant 24 by 23 must fail, already at q^0
    report = kcheck_ttilde(2, constant_override=23)
    assert not report["passed"]
    assert any(key[0] == 0 for key, _ in report["offending"])
