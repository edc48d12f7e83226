"""Small J-function of P^n and the two-point descendant data extracted from it.

All genus-zero data enters through the closed hypergeometric form of the
small J-function of projective space: the degree-d slot of the
exponential-stripped series is

    prod_{k=1}^{d} (H + k z)^{-(n+1)},

a finite Laurent polynomial in z^{-1} since H is nilpotent.  Series are
stored with the prefactor e^{tH/z} stripped; the operator z*d/dt acts on
the stripped series as H + z q d/dq.

Columns of the inverse fundamental solution on the small locus are the
iterates (H + z q d/dq)^k applied to the stripped J, and the q^d
coefficient of column alpha is the descendant polynomial N_{alpha,d}(z).
These obey the degree-axiom constraint that the H^beta component of
N_{alpha,d}(z) is concentrated in the single exponent
z^{alpha - beta - (n+1) d}, which is checked exactly on extraction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .rings import AlgebraPresentation, CohElement, projective_space
from .series import CohSeries, SeriesError, ZLaurent


class HomogeneityError(ValueError):
    """Internal-consistency failure: descendant data violates the degree axiom."""


def _linear_inverse_laurent(alg: AlgebraPresentation, k: int) -> ZLaurent:
    """(H + k z)^{-(n+1)} as a Laurent polynomial in z, exact.

    Expanded as (kz)^{-(n+1)} (1 + H/(kz))^{-(n+1)}; the binomial series
    terminates at the nilpotency order of the ring.
    """
    n = alg.dim_complex
    h = alg.basis(1)
    out = ZLaurent(alg)
    # (1 + H/(kz))^{-(n+1)} = sum_i C(-(n+1), i) H^i (kz)^{-i}
    coeff = Fraction(1)
    power = alg.one()
    for i in range(alg.rank):
        term = power.scale(coeff * Fraction(1, k**i))
        out = out + ZLaurent.monomial(term, -i)
        coeff = coeff * Fraction(-(n + 1) - i, i + 1)
        power = power * h
    return out.z_shift(-(n + 1)).scale(Fraction(1, k ** (n + 1)))


def j_function(n: int, order: int) -> CohSeries:
    """Stripped small J-function of P^n to the given q-order."""
    alg = projective_space(n)
    slots = {0: ZLaurent.constant(alg.one())}
    current = ZLaurent.constant(alg.one())
    for d in range(1, order + 1):
        current = current * _linear_inverse_laurent(alg, d)
        slots[d] = current
    return CohSeries(alg, order, slots)


def dt_stripped(series: CohSeries) -> CohSeries:
    """The operator z d/dt on the stripped series: slot_d -> (H + d z) slot_d."""
    alg = series.algebra
    h = alg.basis(1)
    out = {}
    for d, lau in series.slots.items():
        term = lau.elem_mul(h) + lau.z_shift(1).scale(Fraction(d))
        if not term.is_zero():
            out[d] = term
    return CohSeries(alg, series.order, out)


def fundsol_columns(n: int, order: int) -> list[CohSeries]:
    """Stripped inverse-fundamental-solution columns L^{-1} H^k, k = 0..n."""
    cols = [j_function(n, order)]
    for _ in range(n):
        cols.append(dt_stripped(cols[-1]))
    return cols


class DescendantData:
    """Table N[alpha][d](z) of two-point descendant polynomials plus z=1 values."""

    def __init__(self, algebra: AlgebraPresentation, order: int, table):
        self.algebra = algebra
        self.order = order
        self.table = table  # table[alpha][d] is a ZLaurent
        self.at_one = [
            [lau.eval_z_one() for lau in row] for row in table
        ]
        self._check_homogeneity()

    def _check_homogeneity(self):
        alg = self.algebra
        n1 = alg.dim_complex + 1
        for alpha, row in enumerate(self.table):
            for d, lau in enumerate(row):
                for zexp, elem in lau.coeffs.items():
                    for beta, c in enumerate(elem.coeffs):
                        if c and zexp != alpha - beta - n1 * d:
                            raise HomogeneityError(
                                f"N[{alpha}][{d}]: H^{beta} component at z^{zexp}, "
                                f"expected z^{alpha - beta - n1 * d}"
                            )

    def n_poly(self, alpha: int, d: int) -> ZLaurent:
        return self.table[alpha][d]

    def n_at_one(self, alpha: int, d: int) -> CohElement:
        return self.at_one[alpha][d]


def extract_descendants(n: int, order: int) -> DescendantData:
    """Read N[alpha][d](z) off the inverse-solution columns."""
    cols = fundsol_columns(n, order)
    alg = cols[0].algebra
    table = [[col.slot(d) for d in range(order + 1)] for col in cols]
    return DescendantData(alg, order, table)


@lru_cache(maxsize=8)
def descendants_cached(n: int, order: int) -> DescendantData:
    """Shared descendant table; immutable, so caching is safe."""
    return extract_descendants(n, order)


def descendant_closed_form(n: int, alpha: int, d: int) -> ZLaurent:
    """Independent oracle: N_{alpha,d}(z) = (H + dz)^alpha prod_k (H + kz)^{-(n+1)}.

    Obtained by applying the slot-diagonal operator to the closed-form sum
    directly rather than through the series pipeline.
    """
    alg = projective_space(n)
    h = alg.basis(1)
    out = ZLaurent.constant(alg.one())
    for k in range(1, d + 1):
        out = out * _linear_inverse_laurent(alg, k)
    factor = ZLaurent.constant(h) + ZLaurent.monomial(alg.one(), 1).scale(Fraction(d))
    for _ in range(alpha):
        out = out * factor
    return out


def quantum_de_check(n: int, order: int) -> bool:
    """((z d/dt)^{n+1} - q) annihilates the stripped J-series to the given order.

    Equivalent to the hypergeometric recursion (H + dz)^{n+1} slot_d =
    slot_{d-1}; checked exactly slot by slot.
    """
    series = j_function(n, order)
    iterated = series
    for _ in range(n + 1):
        iterated = dt_stripped(iterated)
    for d in range(1, order + 1):
        if not (iterated.slot(d) - series.slot(d - 1)).is_zero():
            return False
    return iterated.slot(0).is_zero()


# -- JSON import for externally supplied descendant data ----------------------


def descendants_from_dict(alg: AlgebraPresentation, data: dict) -> DescendantData:
    """Load descendant data for a user-supplied algebra.

    Schema: {"order": D, "columns": [[[zexp, ["p/q", ...]], ...], ...]}
    where columns[alpha][d] lists (z-exponent, coefficient-vector) pairs.
    """
    order = int(data["order"])
    table = []
    for alpha, col in enumerate(data["columns"]):
        row = []
        for d, entry in enumerate(col):
            lau = ZLaurent(alg)
            for zexp, coeffs in entry:
                lau = lau + ZLaurent.monomial(
                    alg.element([Fraction(c) for c in coeffs]), int(zexp)
                )
            row.append(lau)
        if len(row) != order + 1:
            raise SeriesError("descendant column length disagrees with order")
        table.append(row)
    return DescendantData(alg, order, table)


def descendants_to_dict(data: DescendantData) -> dict:
    cols = []
    for row in data.table:
        col = []
        for lau in row:
            col.append(
                [[zexp, [str(c) for c in elem.coeffs]] for zexp, elem in sorted(lau.coeffs.items())]
            )
        cols.append(col)
    return {"order": data.order, "columns": cols}
