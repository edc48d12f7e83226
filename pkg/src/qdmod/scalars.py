"""Scalar coefficient rings used throughout the engine.

Everything downstream is generic over the scalar type: plain ``Fraction``
for the exact pipelines, ``PiConst`` (polynomials in the formal symbol
Pi = pi*sqrt(-1)) where exponential prefactors such as exp(-Pi*rho/z)
appear, and ``complex`` in the numeric Gamma-class mode.  The formal
symbol is never evaluated; identities involving it must cancel
coefficient-wise in powers of Pi.
"""

from __future__ import annotations

from fractions import Fraction


def as_fraction(value) -> Fraction:
    """Coerce ints/strings/Fractions to Fraction, rejecting floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class PiConst:
    """Polynomial in the formal symbol Pi = pi*sqrt(-1), rational coefficients.

    Stored sparsely as {power: Fraction}.  Supports ring arithmetic with
    ints, Fractions and other PiConst values, which is all the cohomology
    machinery requires of a scalar.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, (int, Fraction)):
            coeffs = {0: Fraction(coeffs)}
        self.coeffs = {k: Fraction(v) for k, v in coeffs.items() if v != 0}

    @staticmethod
    def symbol(power: int = 1) -> "PiConst":
        return PiConst({power: Fraction(1)})

    @staticmethod
    def _lift(other):
        if isinstance(other, PiConst):
            return other
        if isinstance(other, (int, Fraction)):
            return PiConst(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return PiConst(out)

    __radd__ = __add__

    def __neg__(self):
        return PiConst({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = {}
        for a, u in self.coeffs.items():
            for b, v in other.coeffs.items():
                key = a + b
                out[key] = out.get(key, Fraction(0)) + u * v
        return PiConst(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, power: int):
        out = PiConst(1)
        for _ in range(power):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def constant_part(self) -> Fraction:
        return self.coeffs.get(0, Fraction(0))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            if k == 0:
                bits.append(str(c))
            elif k == 1:
                bits.append(f"{c}*Pi")
            else:
                bits.append(f"{c}*Pi^{k}")
        return " + ".join(bits)
