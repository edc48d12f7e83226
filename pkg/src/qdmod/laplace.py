"""Truncated Laplace transform and twisted-section arithmetic.

Sections live on the x-side of the transform and are finite sums of
terms  c * q^d * x^{-e} * (log x)^m  with c a cohomology class, e
rational and an implicit global factor e^{tH} (so d/dt acts on a term as
multiplication by d + H).  Nilpotent x-exponents x^{-gamma} are expanded
eagerly into (log x)^m monomials, which keeps d/dx a finite exact
operation.

The z-side counterpart is a sum of terms c * q^d * z^{-gamma-k} with a
fixed nilpotent gamma; the transform sends z^{-gamma-k} to
x^{-gamma-k-1} weighted by the Gamma-function ratio
Gamma(gamma+k+1)/Gamma(gamma+ell), computed as an exact finite
product or inverse product of (gamma + integer) factors in the ring.

Weighted truncation uses w = q x^{-(n+1)}: the q-degree d indexes the
w-grading of every object built here, so sections are truncated at
d <= W and all checks are exact below that order.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .connection import delta_total, ssc_connection
from .jfunction import descendants_cached
from .polymat import MPoly
from .rings import AlgebraPresentation, CohElement, invert_unit, projective_space
from .scalars import as_fraction


class LaplaceError(ValueError):
    pass


class TwistedSection:
    """Finite sum of c * q^d * x^{-e} * (log x)^m terms (implicit e^{tH})."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: AlgebraPresentation, terms=None):
        self.algebra = algebra
        data = {}
        if terms:
            for (d, e, m), c in terms.items():
                if not c.is_zero():
                    data[(int(d), as_fraction(e), int(m))] = c
        self.terms = data

    @staticmethod
    def zero(algebra) -> "TwistedSection":
        return TwistedSection(algebra)

    @staticmethod
    def single(algebra, d, e, m, elem) -> "TwistedSection":
        return TwistedSection(algebra, {(d, as_fraction(e), m): elem})

    def _merge(self, key, elem, out):
        if key in out:
            out[key] = out[key] + elem
        else:
            out[key] = elem

    def __add__(self, other: "TwistedSection") -> "TwistedSection":
        out = dict(self.terms)
        for key, elem in other.terms.items():
            self._merge(key, elem, out)
        return TwistedSection(self.algebra, out)

    def __sub__(self, other: "TwistedSection") -> "TwistedSection":
        return self + (-other)

    def __neg__(self) -> "TwistedSection":
        return TwistedSection(self.algebra, {k: -c for k, c in self.terms.items()})

    def scale(self, scalar) -> "TwistedSection":
        return TwistedSection(self.algebra, {k: c.scale(scalar) for k, c in self.terms.items()})

    def elem_mul(self, elem: CohElement) -> "TwistedSection":
        return TwistedSection(self.algebra, {k: c * elem for k, c in self.terms.items()})

    def shift(self, dq: int = 0, dx_power: int = 0) -> "TwistedSection":
        """Multiply by q^{dq} * x^{dx_power}."""
        return TwistedSection(
            self.algebra,
            {(d + dq, e - dx_power, m): c for (d, e, m), c in self.terms.items()},
        )

    def mul_poly(self, poly: MPoly) -> "TwistedSection":
        """Multiply by a polynomial in (q, x); q-exponents must be >= 0."""
        out = TwistedSection(self.algebra)
        for (a, b, s), v in poly.terms.items():
            if s:
                raise LaplaceError("polynomial with symbolic parameter applied to section")
            if a < 0:
                raise LaplaceError("q^{-1} coefficient against a truncated section")
            out = out + self.shift(a, b).scale(v)
        return out

    def dt(self) -> "TwistedSection":
        """d/dt, acting on a term as multiplication by d + H."""
        alg = self.algebra
        h = alg.basis(1)
        out = {}
        for (d, e, m), c in self.terms.items():
            val = c.scale(Fraction(d)) + h * c
            if not val.is_zero():
                out[(d, e, m)] = val
        return TwistedSection(alg, out)

    def dx(self) -> "TwistedSection":
        """d/dx by the product rule on x^{-e} (log x)^m."""
        terms = {}
        for (d, e, m), c in self.terms.items():
            key1 = (d, e + 1, m)
            val = c.scale(-e)
            if key1 in terms:
                terms[key1] = terms[key1] + val
            else:
                terms[key1] = val
            if m > 0:
                key2 = (d, e + 1, m - 1)
                val2 = c.scale(Fraction(m))
                if key2 in terms:
                    terms[key2] = terms[key2] + val2
                else:
                    terms[key2] = val2
        return TwistedSection(self.algebra, terms)

    def quantum_h(self) -> "TwistedSection":
        """Small quantum multiplication by H: cup product plus the q-wrap."""
        alg = self.algebra
        n = alg.dim_complex
        h = alg.basis(1)
        out = {}
        for (d, e, m), c in self.terms.items():
            classical = h * c
            if not classical.is_zero():
                key = (d, e, m)
                out[key] = out[key] + classical if key in out else classical
            top = c.coeffs[n]
            if top:
                wrap = alg.one().scale(top)
                key = (d + 1, e, m)
                out[key] = out[key] + wrap if key in out else wrap
        return TwistedSection(alg, out)

    def apply_mu_shift(self, sigma) -> "TwistedSection":
        """Apply the diagonal mu - 1/2 - sigma to the coefficients."""
        alg = self.algebra
        s = as_fraction(sigma)
        out = {}
        for key, c in self.terms.items():
            val = alg.element(
                [
                    (alg.mu_eigenvalue(i) - Fraction(1, 2) - s) * ci
                    for i, ci in enumerate(c.coeffs)
                ]
            )
            if not val.is_zero():
                out[key] = val
        return TwistedSection(alg, out)

    def truncate(self, order: int) -> "TwistedSection":
        return TwistedSection(
            self.algebra, {k: c for k, c in self.terms.items() if k[0] <= order}
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TwistedSection):
            return NotImplemented
        return (self - other).is_zero()

    def min_degree(self):
        return min((k[0] for k in self.terms), default=None)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2]))

    def __repr__(self):
        bits = []
        for (d, e, m), c in self.sorted_terms():
            log = f"*(log x)^{m}" if m else ""
            bits.append(f"q^{d}*x^(-{e}){log}*[{c!r}]")
        return " + ".join(bits) if bits else "0"


def expand_nilpotent_exponent(algebra, d, e_scalar, gamma: CohElement, coeff: CohElement) -> TwistedSection:
    """coeff * q^d * x^{-e_scalar - gamma} with gamma nilpotent, as log-monomials."""
    if gamma.constant_term():
        raise LaplaceError("nilpotent exponent has a degree-0 part")
    out = TwistedSection(algebra)
    term = coeff
    out = out + TwistedSection.single(algebra, d, e_scalar, 0, coeff)
    power = coeff
    for m in range(1, algebra.nilpotency_order() + 1):
        power = power * (-gamma)
        if power.is_zero():
            break
        out = out + TwistedSection.single(
            algebra, d, e_scalar, m, power.scale(Fraction(1, factorial(m)))
        )
    return out


class LaurentSection:
    """z-side section: sum of c * q^d * z^{-gamma-k}, gamma fixed nilpotent."""

    __slots__ = ("algebra", "gamma", "terms")

    def __init__(self, algebra, gamma: CohElement, terms=None):
        if gamma.constant_term():
            raise LaplaceError("gamma must be nilpotent (no degree-0 part)")
        self.algebra = algebra
        self.gamma = gamma
        data = {}
        if terms:
            for (d, k), c in terms.items():
                if not c.is_zero():
                    data[(int(d), as_fraction(k))] = c
        self.terms = data

    def z_inverse_mul(self) -> "LaurentSection":
        """Multiply by z^{-1}."""
        return LaurentSection(
            self.algebra, self.gamma, {(d, k + 1): c for (d, k), c in self.terms.items()}
        )

    def d_z_inverse(self) -> "LaurentSection":
        """d/d(z^{-1}): z^{-gamma-k} -> (gamma+k) z^{-gamma-(k-1)}."""
        out = {}
        for (d, k), c in self.terms.items():
            val = self.gamma * c + c.scale(k)
            if not val.is_zero():
                out[(d, k - 1)] = val
        return LaurentSection(self.algebra, self.gamma, out)

    def exponents(self):
        return sorted({k for (_, k) in self.terms})

    def check_admissible(self, ell) -> None:
        """The two admissibility conditions of the transform definition."""
        ell = as_fraction(ell)
        ks = self.exponents()
        if not ks:
            return
        k0 = ks[0]
        if (ell - k0).denominator != 1:
            raise LaplaceError(f"ell - k0 = {ell - k0} is not an integer")
        if k0 <= ell - 2:
            lo, hi = int(k0 + 1), int(ell - 1)
            if lo <= 0 <= hi:
                raise LaplaceError(
                    f"0 lies in {{k0+1,...,ell-1}} = {{{lo},...,{hi}}}: transform undefined"
                )
        for k in ks:
            if (k - k0).denominator != 1:
                raise LaplaceError("exponents do not lie in a single integer coset")

    def truncated_laplace(self, ell) -> TwistedSection:
        """Term-by-term transform with the exact Gamma-ratio weights."""
        ell = as_fraction(ell)
        self.check_admissible(ell)
        alg = self.algebra
        out = TwistedSection(alg)
        for (d, k), c in self.terms.items():
            ratio = gamma_ratio(self.gamma, k, ell)
            out = out + expand_nilpotent_exponent(alg, d, k + 1, self.gamma, c * ratio)
        return out


def gamma_ratio(gamma: CohElement, k, ell) -> CohElement:
    """Gamma(gamma+k+1)/Gamma(gamma+ell) in the nilpotent ring.

    Three cases: a rising product for k >= ell, the empty value 1 at
    k = ell-1, and an inverse product for k <= ell-2 (well defined since
    no factor gamma + j with j = 0 can occur for admissible ell).
    """
    alg = gamma.algebra
    k = as_fraction(k)
    ell = as_fraction(ell)
    if (k - ell).denominator != 1:
        raise LaplaceError("k - ell is not an integer")
    if k >= ell:
        out = alg.one()
        j = ell
        while j <= k:
            out = out * (gamma + alg.scalar(j))
            j += 1
        return out
    if k == ell - 1:
        return alg.one()
    out = alg.one()
    j = k + 1
    while j <= ell - 1:
        if j == 0:
            raise LaplaceError("Gamma-ratio hits the pole gamma + 0")
        out = out * invert_unit(gamma + alg.scalar(j))
        j += 1
    return out


def fl_rule_residuals(section: LaurentSection, ell) -> dict:
    """Both transform rules, as residual sections (zero when they hold)."""
    lap = section.truncated_laplace(ell)
    r1 = section.z_inverse_mul().truncated_laplace(ell) + lap.dx()
    r2 = section.d_z_inverse().truncated_laplace(ell) - lap.shift(0, 1)
    return {"z_inverse_rule": r1, "derivative_rule": r2}


# -- inverse-solution sections for the second structure connection ---------------


def check_prop_admissible(sigma, ell, n: int) -> None:
    sigma = as_fraction(sigma)
    ell = as_fraction(ell)
    if (ell - (Fraction(n - 1, 2) + sigma)).denominator != 1:
        raise LaplaceError("ell is not congruent to (n-1)/2 + sigma mod Z")
    ell_pos_int = ell.denominator == 1 and ell > 0
    sigma_bad = (sigma - Fraction(n - 1, 2)).denominator == 1 and sigma <= Fraction(n - 1, 2)
    if ell_pos_int and sigma_bad:
        raise LaplaceError(
            "inadmissible pair: ell is a positive integer and "
            "sigma lies in (n-1)/2 + Z_{<=0}"
        )


def ksection_z(sigma, alpha: int, n: int, order: int) -> LaurentSection:
    """z-side inverse-solution column for the parameter-sigma connection."""
    sigma = as_fraction(sigma)
    data = descendants_cached(n, order)
    alg = data.algebra
    rho = alg.basis(1).scale(Fraction(n + 1))
    terms = {}
    for d in range(order + 1):
        k = Fraction((n + 1) * d - alg.half_degree(alpha)) + Fraction(n + 1, 2) + sigma
        terms[(d, k)] = data.n_at_one(alpha, d)
    return LaurentSection(alg, rho, terms)


def kcheck_column(sigma, ell, alpha: int, n: int, order: int) -> TwistedSection:
    """Flat-solution column: truncated Laplace transform of the z-side column."""
    sigma = as_fraction(sigma)
    check_prop_admissible(sigma, ell, n)
    return ksection_z(sigma - 1, alpha, n, order).truncated_laplace(ell)


def kcheck_family(sigma, ell, n: int, order: int) -> list[TwistedSection]:
    return [kcheck_column(sigma, ell, alpha, n, order) for alpha in range(n + 1)]


def quintic_solution(kind: str, order: int, pi_scalar=None) -> TwistedSection:
    """The explicit solutions for P^4: kind 'eu' is the (5/2, 1) column for
    T_0; kind 'loc' carries the constant prefactor exp(5 Pi H) (pi_scalar
    defaults to the formal symbol)."""
    from .scalars import PiConst

    if kind == "eu":
        return kcheck_column(Fraction(5, 2), 1, 0, 4, order)
    if kind != "loc":
        raise ValueError("kind must be 'eu' or 'loc'")
    base = kcheck_column(Fraction(-5, 2), 0, 0, 4, order)
    alg = base.algebra
    if pi_scalar is None:
        pi_scalar = PiConst.symbol()
    # exp(5 Pi H) as a finite nilpotent exponential with PiConst coefficients
    prefactor = alg.one()
    h = alg.basis(1)
    power = alg.one()
    for m in range(1, alg.nilpotency_order() + 1):
        power = power * h
        if power.is_zero():
            break
        prefactor = prefactor + power.scale((5 * pi_scalar) ** m / Fraction(factorial(m)))
    return base.elem_mul(prefactor)


# -- connection action and flatness verification ----------------------------------


def resolvent_apply(section: TwistedSection, n: int, order: int) -> TwistedSection:
    """(E - x)^{-1} section via -x^{-1} sum_i (E/x)^i, truncated at q-order."""
    out = TwistedSection(section.algebra)
    current = section.truncate(order)
    while not current.is_zero():
        out = out + current.shift(0, -1)
        current = current.shift(0, -1).quantum_h().scale(n + 1).truncate(order)
    return -out


def connection_apply(section: TwistedSection, sigma, n: int, order: int, direction: str) -> TwistedSection:
    """(d + A) section for a single section (left matrix action)."""
    if direction == "x":
        acted = resolvent_apply(section, n, order)
        return (section.dx() - acted.apply_mu_shift(sigma)).truncate(order)
    if direction == "t":
        acted = resolvent_apply(section.quantum_h().truncate(order), n, order)
        return (section.dt() + acted.apply_mu_shift(sigma)).truncate(order)
    raise ValueError("direction must be 't' or 'x'")


def verify_flat_section(section: TwistedSection, sigma, n: int, order: int) -> dict:
    """Flat-section residuals (d + A) section in both directions."""
    rt = connection_apply(section, sigma, n, order, "t")
    rx = connection_apply(section, sigma, n, order, "x")
    return {
        "passed": rt.is_zero() and rx.is_zero(),
        "residual_t": rt,
        "residual_x": rx,
    }


def _family_right_mul(columns, matrix_entries) -> list[TwistedSection]:
    """Right-multiply a row of section columns by a matrix of polynomials."""
    size = len(columns)
    out = []
    for alpha in range(size):
        acc = TwistedSection(columns[0].algebra)
        for beta in range(size):
            entry = matrix_entries[beta][alpha]
            if entry.is_zero():
                continue
            acc = acc + columns[beta].mul_poly(entry)
        out.append(acc)
    return out


def verify_ssc_solution(columns: list[TwistedSection], sigma, n: int, order: int) -> dict:
    """Verify that the columns form a solution family of the connection.

    The solution identity is the matrix system dK = K A; cleared of the
    resolvent denominator it reads, column by column,

        [dK/dx] (x - E)  =  K (mu - 1/2 - sigma)
        [dK/dt] + [dK/dx] (H bullet)  =  0

    with purely polynomial right-multiplications.  Truncation to q-order
    W is exact: the dropped q-degrees cannot feed back into lower ones.
    """
    sigma = as_fraction(sigma)
    alg = columns[0].algebra
    size = n + 1
    x_minus_e = [
        [MPoly() for _ in range(size)] for _ in range(size)
    ]
    for i in range(size):
        x_minus_e[i][i] = MPoly.var_x()
    for a in range(n):
        x_minus_e[a + 1][a] = MPoly.const(-(n + 1))
    x_minus_e[0][n] = MPoly.monomial(-(n + 1), 1, 0)
    h_entries = [[MPoly() for _ in range(size)] for _ in range(size)]
    for a in range(n):
        h_entries[a + 1][a] = MPoly.const(1)
    h_entries[0][n] = MPoly.var_q()

    dx_cols = [col.dx().truncate(order) for col in columns]
    dt_cols = [col.dt().truncate(order) for col in columns]
    lhs_x = _family_right_mul(dx_cols, x_minus_e)
    dx_times_h = _family_right_mul(dx_cols, h_entries)
    failures = []
    for alpha in range(size):
        # right multiplication by the diagonal scales column alpha by its
        # own eigenvalue |alpha| - n/2 - 1/2 - sigma
        eig = alg.mu_eigenvalue(alpha) - Fraction(1, 2) - sigma
        res_x = (lhs_x[alpha] - columns[alpha].scale(eig)).truncate(order)
        res_t = (dt_cols[alpha] + dx_times_h[alpha]).truncate(order)
        for key, val in list(res_x.terms.items()) + list(res_t.terms.items()):
            failures.append((alpha, key, repr(val)))
    return {"passed": not failures, "offending": failures[:10], "order": order}


def kcheck_delta_consistency(n: int, order: int) -> dict:
    """The loc solution composed with the total difference morphism equals
    Euler-class multiplication composed with the eu solution, term by term."""
    alg = projective_space(n)
    rho = alg.basis(1).scale(Fraction(n + 1))
    total = delta_total(n)
    buffer = max(
        [total.den.max_exponents()[0]]
        + [p.max_exponents()[0] for row in total.nums for p in row if not p.is_zero()]
    )
    cols_loc = kcheck_family(Fraction(-(n + 1), 2), 0, n, order + buffer)
    cols_eu = kcheck_family(Fraction(n + 1, 2), 1, n, order + buffer)
    failures = []
    for alpha in range(n + 1):
        lhs = TwistedSection(alg)
        for beta in range(n + 1):
            entry = total.nums[beta][alpha]
            if not entry.is_zero():
                lhs = lhs + cols_loc[beta].mul_poly(entry)
        rhs = cols_eu[alpha].elem_mul(rho).mul_poly(total.den)
        res = (lhs - rhs).truncate(order)
        for key, val in res.terms.items():
            failures.append((alpha, key, repr(val)))
    return {"passed": not failures, "offending": failures[:10], "order": order}
