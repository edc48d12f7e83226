"""Exact arithmetic in finite-dimensional graded cohomology rings.

An algebra is presented by a homogeneous basis T_0, ..., T_s (T_0 the
unit), even degrees, exact rational structure constants and an
integration functional.  The built-in preset is H*(P^n) with basis
1, H, ..., H^n, and the characteristic-class data c(TP^n), Td(TP^n),
ch(O(k)) is provided with exact rational coefficients.

Elements carry their coefficients in an arbitrary commutative scalar
ring (Fraction, PiConst, complex); all operations are pure and every
value is immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .scalars import as_fraction

_ZERO = Fraction(0)


class AlgebraError(ValueError):
    pass


class AlgebraPresentation:
    """Graded commutative algebra with integration functional.

    Attributes:
        labels: basis element names.
        degrees: real (even) cohomological degrees, so |alpha| = degree/2.
        mult_table: mult_table[a][b] is the coefficient tuple of T_a * T_b.
        integration: rationals (integral of each basis element).
        dim_complex: complex dimension n of the underlying space.
    """

    def __init__(self, labels, degrees, mult_table, integration, dim_complex):
        self.labels = tuple(labels)
        self.rank = len(self.labels)
        self.degrees = tuple(int(d) for d in degrees)
        self.mult_table = tuple(
            tuple(tuple(as_fraction(c) for c in row) for row in block)
            for block in mult_table
        )
        self.integration = tuple(as_fraction(c) for c in integration)
        self.dim_complex = int(dim_complex)
        self._validate()

    def _validate(self):
        r = self.rank
        if r == 0:
            raise AlgebraError("empty basis")
        if len(self.degrees) != r or len(self.integration) != r:
            raise AlgebraError("field lengths disagree with basis size")
        if any(d < 0 or d % 2 for d in self.degrees):
            raise AlgebraError("degrees must be even and non-negative")
        if self.degrees[0] != 0:
            raise AlgebraError("T_0 must have degree 0")
        tab = self.mult_table
        # unit
        for a in range(r):
            if tab[0][a] != tuple(Fraction(int(a == g)) for g in range(r)):
                raise AlgebraError("T_0 is not the unit")
        # commutativity / associativity on all basis triples, grading
        for a in range(r):
            for b in range(r):
                if tab[a][b] != tab[b][a]:
                    raise AlgebraError(f"multiplication not commutative at ({a},{b})")
                for g in range(r):
                    if tab[a][b][g] and self.degrees[g] != self.degrees[a] + self.degrees[b]:
                        raise AlgebraError(f"grading violated at ({a},{b},{g})")
        for a in range(r):
            for b in range(r):
                ab = self.basis(a) * self.basis(b)
                for c in range(r):
                    if (ab * self.basis(c)).coeffs != (self.basis(a) * (self.basis(b) * self.basis(c))).coeffs:
                        raise AlgebraError(f"multiplication not associative at ({a},{b},{c})")
        if _det_fraction(self.pairing_matrix()) == 0:
            raise AlgebraError("Poincare pairing is degenerate")

    # -- element constructors ------------------------------------------------

    def zero(self) -> "CohElement":
        return CohElement(self, (_ZERO,) * self.rank)

    def one(self) -> "CohElement":
        return self.basis(0)

    def basis(self, index: int) -> "CohElement":
        return CohElement(
            self, tuple(Fraction(int(i == index)) for i in range(self.rank))
        )

    def element(self, coeffs) -> "CohElement":
        coeffs = tuple(coeffs)
        if len(coeffs) != self.rank:
            raise AlgebraError("coefficient vector has wrong length")
        return CohElement(self, coeffs)

    def scalar(self, value) -> "CohElement":
        out = [_ZERO] * self.rank
        out[0] = value
        return CohElement(self, tuple(out))

    # -- structural data -----------------------------------------------------

    def half_degree(self, index: int) -> int:
        return self.degrees[index] // 2

    def mu_eigenvalue(self, index: int) -> Fraction:
        return Fraction(self.half_degree(index)) - Fraction(self.dim_complex, 2)

    def pairing_matrix(self):
        """Gram matrix of the Poincare pairing, integral of T_a * T_b."""
        return [
            [(self.basis(a) * self.basis(b)).integrate() for b in range(self.rank)]
            for a in range(self.rank)
        ]

    def multiplication_matrix(self, elem: "CohElement"):
        """Matrix of classical multiplication by elem, columns indexed by basis."""
        cols = [(elem * self.basis(a)).coeffs for a in range(self.rank)]
        return [[cols[a][b] for a in range(self.rank)] for b in range(self.rank)]

    def nilpotency_order(self) -> int:
        """Smallest m with (positive-degree part)^m = 0; equals n+1 for P^n."""
        return self.dim_complex + 1


class CohElement:
    """Cohomology class: coefficient vector over an AlgebraPresentation."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: AlgebraPresentation, coeffs):
        self.algebra = algebra
        self.coeffs = tuple(coeffs)

    def _check(self, other: "CohElement"):
        if self.algebra is not other.algebra:
            raise AlgebraError("elements over different algebras")

    def __add__(self, other):
        if not isinstance(other, CohElement):
            return NotImplemented
        self._check(other)
        return CohElement(self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, CohElement):
            return NotImplemented
        self._check(other)
        return CohElement(self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CohElement(self.algebra, tuple(-a for a in self.coeffs))

    def scale(self, scalar) -> "CohElement":
        return CohElement(self.algebra, tuple(scalar * a for a in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, CohElement):
            return self.scale(other)
        self._check(other)
        alg = self.algebra
        out = [_ZERO] * alg.rank
        for a, ca in enumerate(self.coeffs):
            if not ca:
                continue
            for b, cb in enumerate(other.coeffs):
                if not cb:
                    continue
                for g, s in enumerate(alg.mult_table[a][b]):
                    if s:
                        out[g] = out[g] + ca * cb * s
        return CohElement(alg, tuple(out))

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __eq__(self, other):
        if not isinstance(other, CohElement):
            return NotImplemented
        return self.algebra is other.algebra and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((id(self.algebra), self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def integrate(self):
        total = _ZERO
        for c, w in zip(self.coeffs, self.algebra.integration):
            if c and w:
                total = total + c * w
        return total

    def mu(self) -> "CohElement":
        alg = self.algebra
        return CohElement(
            alg, tuple(alg.mu_eigenvalue(i) * c for i, c in enumerate(self.coeffs))
        )

    def power(self, m: int) -> "CohElement":
        out = self.algebra.one()
        for _ in range(m):
            out = out * self
        return out

    def degree_part(self, half_degree: int) -> "CohElement":
        alg = self.algebra
        return CohElement(
            alg,
            tuple(
                c if alg.half_degree(i) == half_degree else _ZERO
                for i, c in enumerate(self.coeffs)
            ),
        )

    def constant_term(self):
        """Degree-0 coefficient (coefficient of the unit)."""
        return self.coeffs[0]

    def __repr__(self):
        bits = [
            f"({c})*{self.algebra.labels[i]}"
            for i, c in enumerate(self.coeffs)
            if c
        ]
        return " + ".join(bits) if bits else "0"


# -- nilpotent series helpers -----------------------------------------------


def nilpotent_exp(elem: CohElement) -> CohElement:
    """exp of a class with vanishing degree-0 part: finite sum over nilpotency."""
    if elem.constant_term():
        raise AlgebraError("nilpotent_exp requires vanishing degree-0 part")
    alg = elem.algebra
    out = alg.one()
    term = alg.one()
    for m in range(1, alg.nilpotency_order() + 1):
        term = term * elem
        if term.is_zero():
            break
        out = out + term.scale(Fraction(1, factorial(m)))
    return out


def invert_unit(elem: CohElement) -> CohElement:
    """Inverse of unit + nilpotent via the finite geometric series."""
    c0 = elem.constant_term()
    if not c0:
        raise AlgebraError("element is not a unit (degree-0 part vanishes)")
    alg = elem.algebra
    inv0 = 1 / c0 if not isinstance(c0, Fraction) else Fraction(1) / c0
    nil = elem.scale(inv0) - alg.one()
    out = alg.one()
    power = alg.one()
    sign = 1
    for _ in range(alg.nilpotency_order()):
        power = power * nil
        sign = -sign
        if power.is_zero():
            break
        out = out + power.scale(sign)
    return out.scale(inv0)


# -- presets -----------------------------------------------------------------


@lru_cache(maxsize=None)
def projective_space(n: int) -> AlgebraPresentation:
    """H*(P^n): basis 1, H, ..., H^n with the truncation H^{n+1} = 0.

    Cached so repeated calls share one presentation object; values are
    immutable, so sharing is safe.
    """
    if n < 1:
        raise AlgebraError("n must be >= 1 (degenerate ring unsupported)")
    rank = n + 1
    labels = ["1"] + [f"H^{k}" if k > 1 else "H" for k in range(1, rank)]
    degrees = [2 * k for k in range(rank)]
    table = [
        [
            [Fraction(int(g == a + b)) for g in range(rank)]
            for b in range(rank)
        ]
        for a in range(rank)
    ]
    integration = [Fraction(int(k == n)) for k in range(rank)]
    return AlgebraPresentation(labels, degrees, table, integration, n)


def chern_data(n: int):
    """Total Chern class, Todd class of TP^n and ch(O(k)), all exact.

    Returns a dict with keys "c_total", "todd" and "ch_line" (a callable).
    """
    alg = projective_space(n)
    h = alg.basis(1)
    one_plus_h = alg.one() + h
    c_total = one_plus_h.power(n + 1)

    # Td(TP^n) = (H / (1 - e^{-H}))^{n+1}.  The quotient (1 - e^{-H})/H has
    # the closed form sum_j (-1)^j H^j/(j+1)!, built directly so the H^n
    # coefficient is not lost to ring truncation before the division.
    ratio = alg.zero()
    for j in range(alg.rank):
        ratio = ratio + alg.basis(j).scale(Fraction((-1) ** j, factorial(j + 1)))
    todd = invert_unit(ratio).power(n + 1)

    def ch_line(k: int) -> CohElement:
        return nilpotent_exp(h.scale(Fraction(k)))

    return {"c_total": c_total, "todd": todd, "ch_line": ch_line}


def euler_characteristic_line(n: int, m: int) -> Fraction:
    """chi(P^n, O(m)) via the binomial formula, used as an independent oracle."""
    if m >= -n:
        return Fraction(comb(n + m, n))
    return Fraction((-1) ** n * comb(-m - 1, n))


# -- rational linear algebra (small, dense, exact) ---------------------------


def _det_fraction(matrix) -> Fraction:
    m = [list(row) for row in matrix]
    r = len(m)
    det = Fraction(1)
    for col in range(r):
        pivot = next((i for i in range(col, r) if m[i][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for i in range(col + 1, r):
            if m[i][col]:
                f = m[i][col] * inv
                for j in range(col, r):
                    m[i][j] -= f * m[col][j]
    return det


# -- JSON presentation files --------------------------------------------------


def algebra_from_dict(data: dict) -> AlgebraPresentation:
    """Build an algebra from the JSON presentation schema.

    Schema: {"labels": [...], "degrees": [...],
             "struct": [[[ [gamma, "p/q"], ...], ...], ...],
             "integration": ["p/q", ...], "dim": n}
    """
    labels = data["labels"]
    rank = len(labels)
    table = [
        [[Fraction(0)] * rank for _ in range(rank)] for _ in range(rank)
    ]
    for a, row in enumerate(data["struct"]):
        for b, cell in enumerate(row):
            for gamma, value in cell:
                table[a][b][int(gamma)] = as_fraction(value)
    return AlgebraPresentation(
        labels, data["degrees"], table, [as_fraction(v) for v in data["integration"]], data["dim"]
    )


def algebra_to_dict(alg: AlgebraPresentation) -> dict:
    struct = [
        [
            [[g, str(c)] for g, c in enumerate(alg.mult_table[a][b]) if c]
            for b in range(alg.rank)
        ]
        for a in range(alg.rank)
    ]
    return {
        "labels": list(alg.labels),
        "degrees": list(alg.degrees),
        "struct": struct,
        "integration": [str(c) for c in alg.integration],
        "dim": alg.dim_complex,
    }
