"""Noncommutative operator arithmetic in d/dt over Q[q^{+-1}, x^{+-1}].

Operators are stored in normal form with all powers of d/dt on the
right; coefficients are Laurent polynomials in q and x (x central) with
an optional central parameter s.  The commutation rule is

    d/dt * q^a = q^a * (d/dt + a),

so normal-ordering a product only requires the binomial push-through
d^p q^a = q^a (d + a)^p.

The quintic operators, their factorizations, the intertwining relation
and the symbolic one-parameter family specializing to them are built
here, together with the action of operators on twisted sections (d/dt
acts on a section term as multiplication by d + H, x multiplicatively).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .laplace import LaplaceError, TwistedSection
from .polymat import MPoly
from .scalars import as_fraction


class WeylOp:
    """Normal-ordered operator: {power of d/dt: MPoly coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for p, coeff in terms.items():
                if not coeff.is_zero():
                    data[int(p)] = coeff
        self.terms = data

    @staticmethod
    def zero() -> "WeylOp":
        return WeylOp()

    @staticmethod
    def const(poly) -> "WeylOp":
        if isinstance(poly, (int, Fraction)):
            poly = MPoly.const(poly)
        return WeylOp({0: poly})

    @staticmethod
    def dt(power: int = 1) -> "WeylOp":
        return WeylOp({power: MPoly.const(1)})

    def degree(self) -> int:
        return max(self.terms, default=-1)

    def __add__(self, other: "WeylOp") -> "WeylOp":
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out[p] + c if p in out else c
        return WeylOp(out)

    def __sub__(self, other: "WeylOp") -> "WeylOp":
        return self + (-other)

    def __neg__(self) -> "WeylOp":
        return WeylOp({p: -c for p, c in self.terms.items()})

    def __mul__(self, other: "WeylOp") -> "WeylOp":
        out = {}
        for p, cp in self.terms.items():
            for r, cr in other.terms.items():
                # push d^p through the coefficient cr monomial by monomial:
                # d^p q^a = q^a sum_j C(p,j) a^{p-j} d^j
                for (a, b, s), v in cr.terms.items():
                    mono = MPoly.monomial(v, a, b, s)
                    for j in range(p + 1):
                        coeff = cp * mono * MPoly.const(
                            Fraction(comb(p, j)) * Fraction(a) ** (p - j)
                        )
                        key = j + r
                        out[key] = out[key] + coeff if key in out else coeff
        return WeylOp({p: c for p, c in out.items() if not c.is_zero()})

    def __eq__(self, other):
        if not isinstance(other, WeylOp):
            return NotImplemented
        return (self - other).is_zero()

    def is_zero(self) -> bool:
        return not self.terms

    def substitute_s(self, value) -> "WeylOp":
        return WeylOp({p: c.substitute_s(value) for p, c in self.terms.items()})

    def coefficient(self, power: int) -> MPoly:
        return self.terms.get(power, MPoly())

    def apply(self, section: TwistedSection, order: int) -> TwistedSection:
        """Act on a twisted section; coefficients must be q-polynomial."""
        alg = section.algebra
        out = TwistedSection(alg)
        for p, coeff in self.terms.items():
            if any(a < 0 for (a, _, _) in coeff.terms):
                raise LaplaceError(
                    "operator has q^{-1} coefficients; refusing to act on a "
                    "section truncated at q-degree >= 0"
                )
            acted = section
            for _ in range(p):
                acted = acted.dt()
            out = out + acted.mul_poly(coeff)
        return out.truncate(order)

    def pretty(self) -> str:
        """Normal form with q, x, dt tokens, highest derivative first."""
        if not self.terms:
            return "0"
        bits = []
        for p in sorted(self.terms, reverse=True):
            coeff = self.terms[p]
            body = _pretty_poly(coeff)
            if p == 0:
                bits.append(body)
            else:
                op = "dt" if p == 1 else f"dt^{p}"
                bits.append(f"({body})*{op}" if len(coeff.terms) > 1 else f"{body}*{op}")
        return " + ".join(bits)

    def __repr__(self):
        return f"WeylOp({self.pretty()})"


def _pretty_poly(poly: MPoly) -> str:
    if poly.is_zero():
        return "0"
    bits = []
    for (a, b, s), v in sorted(poly.terms.items()):
        mono = "".join(
            (f"*{nm}" if e == 1 else f"*{nm}^{e}")
            for nm, e in (("q", a), ("x", b), ("s", s))
            if e
        )
        if v == 1 and mono:
            bits.append(mono[1:])
        else:
            bits.append(f"{v}{mono}")
    return " + ".join(bits)


def linear_dt(scale, shift) -> WeylOp:
    """scale * d/dt + shift, shift an MPoly or rational."""
    if isinstance(shift, (int, Fraction)):
        shift = MPoly.const(shift)
    return WeylOp({1: MPoly.const(scale), 0: shift})


def sigma_family_operator(n: int = 4) -> WeylOp:
    """The one-parameter operator annihilating the cyclic generator:

        (x dt)^{n+1} - q * prod_{j=0}^{n} ((n+1) dt + s + (n+1)/2 + j)

    built symbolically in the central parameter s; s = +-(n+1)/2
    specialize to the Euler-twisted and local quintic operators at n = 4.
    """
    lead = WeylOp({n + 1: MPoly.monomial(1, 0, n + 1)})
    prod = WeylOp.const(MPoly.monomial(1, 1, 0))
    for j in range(n + 1):
        shift = MPoly.var_s() + MPoly.const(Fraction(n + 1, 2) + j)
        prod = prod * linear_dt(n + 1, shift)
    return lead - prod


def build_quintic_ops() -> dict:
    """The quintic operators, their ds-factor companions and display strings."""
    q = MPoly.var_q()
    dt = WeylOp.dt()

    def falling(ks):
        out = WeylOp.const(1)
        for k in ks:
            out = out * linear_dt(5, k)
        return out

    x5dt5 = WeylOp({5: MPoly.monomial(1, 0, 5)})
    x5dt4 = WeylOp({4: MPoly.monomial(1, 0, 5)})
    d_eu = x5dt5 - WeylOp.const(q) * falling([9, 8, 7, 6, 5])
    d_loc = x5dt5 - WeylOp.const(q) * falling([4, 3, 2, 1, 0])
    p_eu = x5dt4 - WeylOp.const(q * 5) * falling([9, 8, 7, 6])
    p_loc = x5dt4 - WeylOp.const(q * 5) * falling([4, 3, 2, 1])
    return {
        "D_eu": d_eu,
        "D_loc": d_loc,
        "P_eu": p_eu,
        "P_loc": p_loc,
        "display": {
            "D_eu": "(x*dt)^5 - q*(5dt+9)(5dt+8)(5dt+7)(5dt+6)(5dt+5)",
            "D_loc": "(x*dt)^5 - q*(5dt+4)(5dt+3)(5dt+2)(5dt+1)(5dt)",
            "P_eu": "x*(x*dt)^4 - 5q*(5dt+9)(5dt+8)(5dt+7)(5dt+6)",
            "P_loc": "x*(x*dt)^4 - 5q*(5dt+4)(5dt+3)(5dt+2)(5dt+1)",
        },
    }


def factorization_report() -> dict:
    """D_eu = dt * P_eu and D_loc = P_loc * dt, exact in normal form."""
    ops = build_quintic_ops()
    dt = WeylOp.dt()
    return {
        "eu_factorization": (dt * ops["P_eu"]) == ops["D_eu"],
        "loc_factorization": (ops["P_loc"] * dt) == ops["D_loc"],
    }


def intertwiner_check() -> dict:
    """D_eu * e^{-t} dt^5 = dt^5 * e^{-t} * D_loc, both sides normal-ordered."""
    ops = build_quintic_ops()
    qinv = WeylOp.const(MPoly.monomial(1, -1, 0))
    lhs = ops["D_eu"] * qinv * WeylOp.dt(5)
    rhs = WeylOp.dt(5) * qinv * ops["D_loc"]
    diff = lhs - rhs
    return {
        "passed": diff.is_zero(),
        "lhs_degree": lhs.degree(),
        "rhs_degree": rhs.degree(),
        "difference": diff,
    }


def sigma_specialization_report() -> dict:
    family = sigma_family_operator(4)
    ops = build_quintic_ops()
    return {
        "eu": family.substitute_s(Fraction(5, 2)) == ops["D_eu"],
        "loc": family.substitute_s(Fraction(-5, 2)) == ops["D_loc"],
    }


def annihilate_check(op: WeylOp, section: TwistedSection, order: int) -> dict:
    """op(section) = 0 up to the weighted order; residual terms reported.

    The section must be built at least to q-degree `order`; the operator
    never lowers q-degree, so the residual below that order is exact.
    """
    residual = op.apply(section, order)
    offending = [(key, repr(val)) for key, val in residual.sorted_terms()]
    return {"passed": residual.is_zero(), "offending": offending[:10], "order": order}
