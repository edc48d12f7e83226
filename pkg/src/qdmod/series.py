"""Truncated formal-series arithmetic.

Two layers:

* ``UniSeries`` -- scalar power series in q = e^t with exact rational
  coefficients, truncated at a tracked order.  Carries the calculus needed
  for mirror-map manipulation: exp, log, composition and reversion.

* ``ZLaurent`` / ``CohSeries`` -- q-series whose degree-d coefficient is a
  Laurent polynomial in z with cohomology-valued coefficients.  The
  z-support is stored per q-degree, since degree-d slots of the series we
  build reach exponents of order -(n+1)d.

Truncation orders propagate as the minimum over operands.  Division is
provided only by units (invertible constant term).
"""

from __future__ import annotations

from fractions import Fraction

from .rings import AlgebraPresentation, CohElement
from .scalars import as_fraction


class SeriesError(ValueError):
    pass


class UniSeries:
    """Truncated scalar power series: coefficients indexed 0..order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        self.order = int(order)
        if self.order < 0:
            raise SeriesError("order must be non-negative")
        data = [as_fraction(c) for c in coeffs]
        data = data[: self.order + 1]
        data += [Fraction(0)] * (self.order + 1 - len(data))
        self.coeffs = tuple(data)

    @staticmethod
    def zero(order: int) -> "UniSeries":
        return UniSeries(order)

    @staticmethod
    def one(order: int) -> "UniSeries":
        return UniSeries(order, [Fraction(1)])

    @staticmethod
    def identity(order: int) -> "UniSeries":
        """The series q."""
        return UniSeries(order, [Fraction(0), Fraction(1)])

    def __getitem__(self, d: int) -> Fraction:
        return self.coeffs[d]

    def truncate(self, order: int) -> "UniSeries":
        return UniSeries(min(self.order, order), self.coeffs)

    def __add__(self, other: "UniSeries") -> "UniSeries":
        order = min(self.order, other.order)
        return UniSeries(order, [self.coeffs[d] + other.coeffs[d] for d in range(order + 1)])

    def __sub__(self, other: "UniSeries") -> "UniSeries":
        order = min(self.order, other.order)
        return UniSeries(order, [self.coeffs[d] - other.coeffs[d] for d in range(order + 1)])

    def __neg__(self) -> "UniSeries":
        return UniSeries(self.order, [-c for c in self.coeffs])

    def scale(self, scalar) -> "UniSeries":
        s = as_fraction(scalar)
        return UniSeries(self.order, [s * c for c in self.coeffs])

    def __mul__(self, other: "UniSeries") -> "UniSeries":
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if not a:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return UniSeries(order, out)

    def __eq__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return self.coeffs[: order + 1] == other.coeffs[: order + 1]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def shift(self, k: int) -> "UniSeries":
        """Multiply by q^k (k >= 0) or divide by q^k (k < 0, requires divisibility)."""
        if k >= 0:
            return UniSeries(self.order + k, [Fraction(0)] * k + list(self.coeffs))
        if any(self.coeffs[: -k]):
            raise SeriesError(f"series not divisible by q^{-k}")
        return UniSeries(self.order + k, self.coeffs[-k:])

    def scale_q(self, factor) -> "UniSeries":
        """Substitute q -> factor * q for a rational factor (e.g. -1)."""
        f = as_fraction(factor)
        return UniSeries(self.order, [c * f**d for d, c in enumerate(self.coeffs)])

    def reciprocal(self) -> "UniSeries":
        """1/self for a unit, by recursive division."""
        c0 = self.coeffs[0]
        if not c0:
            raise SeriesError("reciprocal of non-unit (vanishing constant term)")
        inv = [Fraction(1) / c0]
        for d in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, d + 1):
                acc += self.coeffs[i] * inv[d - i]
            inv.append(-acc / c0)
        return UniSeries(self.order, inv)

    def __truediv__(self, other: "UniSeries") -> "UniSeries":
        return self * other.reciprocal()

    def exp(self) -> "UniSeries":
        """exp of a series with vanishing constant term (exactness requires it)."""
        if self.coeffs[0]:
            raise SeriesError("exp requires vanishing constant term")
        # e' = a' e gives the coefficient recursion d*e_d = sum_j j*a_j*e_{d-j}
        out = [Fraction(1)]
        for d in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, d + 1):
                if self.coeffs[j]:
                    acc += Fraction(j) * self.coeffs[j] * out[d - j]
            out.append(acc / d)
        return UniSeries(self.order, out)

    def log(self) -> "UniSeries":
        """log of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise SeriesError("log requires constant term 1 (factor q first where applicable)")
        # l' = a'/a: d*a_d = sum of l and a convolution, solved for l_d
        out = [Fraction(0)]
        for d in range(1, self.order + 1):
            acc = Fraction(d) * self.coeffs[d]
            for j in range(1, d):
                acc -= Fraction(j) * out[j] * self.coeffs[d - j]
            out.append(acc / d)
        return UniSeries(self.order, out)

    def compose(self, inner: "UniSeries") -> "UniSeries":
        """self(inner(q)); requires inner(0) = 0."""
        if inner.coeffs[0]:
            raise SeriesError("compose requires inner constant term 0")
        order = min(self.order, inner.order)
        out = UniSeries(order, [self.coeffs[0]])
        power = UniSeries.one(order)
        for d in range(1, order + 1):
            power = power * inner
            if self.coeffs[d]:
                out = out + power.scale(self.coeffs[d])
        return out

    def revert(self) -> "UniSeries":
        """Compositional inverse of q*(unit), term-by-term solve."""
        if self.coeffs[0] or not self.coeffs[1]:
            raise SeriesError("reversion requires a(0) = 0 and a'(0) != 0")
        a1 = self.coeffs[1]
        inv = [Fraction(0), Fraction(1) / a1]
        for d in range(2, self.order + 1):
            partial = UniSeries(d, inv + [Fraction(0)])
            value = self.truncate(d).compose(partial)
            inv.append(-value.coeffs[d] / a1)
        return UniSeries(self.order, inv)

    def derivative_t(self) -> "UniSeries":
        """d/dt = q d/dq acting on q-series."""
        return UniSeries(self.order, [Fraction(d) * c for d, c in enumerate(self.coeffs)])

    def __repr__(self):
        bits = [f"{c}*q^{d}" for d, c in enumerate(self.coeffs) if c]
        body = " + ".join(bits) if bits else "0"
        return f"{body} + O(q^{self.order + 1})"


class ZLaurent:
    """Laurent polynomial in z with CohElement coefficients (sparse by exponent)."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: AlgebraPresentation, coeffs=None):
        self.algebra = algebra
        data = {}
        if coeffs:
            for k, v in coeffs.items():
                if not v.is_zero():
                    data[int(k)] = v
        self.coeffs = data

    @staticmethod
    def constant(elem: CohElement) -> "ZLaurent":
        return ZLaurent(elem.algebra, {0: elem})

    @staticmethod
    def monomial(elem: CohElement, zexp: int) -> "ZLaurent":
        return ZLaurent(elem.algebra, {zexp: elem})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "ZLaurent") -> "ZLaurent":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return ZLaurent(self.algebra, out)

    def __sub__(self, other: "ZLaurent") -> "ZLaurent":
        return self + (-other)

    def __neg__(self) -> "ZLaurent":
        return ZLaurent(self.algebra, {k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other: "ZLaurent") -> "ZLaurent":
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = i + j
                prod = a * b
                out[k] = out[k] + prod if k in out else prod
        return ZLaurent(self.algebra, out)

    def scale(self, scalar) -> "ZLaurent":
        return ZLaurent(self.algebra, {k: v.scale(scalar) for k, v in self.coeffs.items()})

    def elem_mul(self, elem: CohElement) -> "ZLaurent":
        return ZLaurent(self.algebra, {k: v * elem for k, v in self.coeffs.items()})

    def z_shift(self, s: int) -> "ZLaurent":
        return ZLaurent(self.algebra, {k + s: v for k, v in self.coeffs.items()})

    def substitute_neg_z(self) -> "ZLaurent":
        """z -> -z."""
        return ZLaurent(
            self.algebra,
            {k: v.scale((-1) ** (k % 2)) for k, v in self.coeffs.items()},
        )

    def apply(self, func) -> "ZLaurent":
        """Apply a linear map CohElement -> CohElement coefficient-wise."""
        return ZLaurent(self.algebra, {k: func(v) for k, v in self.coeffs.items()})

    def coefficient(self, zexp: int) -> CohElement:
        return self.coeffs.get(zexp, self.algebra.zero())

    def eval_z_one(self) -> CohElement:
        total = self.algebra.zero()
        for v in self.coeffs.values():
            total = total + v
        return total

    def support(self):
        return sorted(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ZLaurent):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        bits = [f"z^{k}*[{v!r}]" for k, v in sorted(self.coeffs.items())]
        return " + ".join(bits) if bits else "0"


class CohSeries:
    """q-power series with ZLaurent coefficients, truncated at a tracked order."""

    __slots__ = ("algebra", "order", "slots")

    def __init__(self, algebra: AlgebraPresentation, order: int, slots=None):
        self.algebra = algebra
        self.order = int(order)
        data = {}
        if slots:
            for d, lau in slots.items():
                if 0 <= d <= self.order and not lau.is_zero():
                    data[int(d)] = lau
        self.slots = data

    @staticmethod
    def constant(elem: CohElement, order: int) -> "CohSeries":
        return CohSeries(elem.algebra, order, {0: ZLaurent.constant(elem)})

    def slot(self, d: int) -> ZLaurent:
        return self.slots.get(d, ZLaurent(self.algebra))

    def truncate(self, order: int) -> "CohSeries":
        return CohSeries(self.algebra, min(self.order, order), self.slots)

    def __add__(self, other: "CohSeries") -> "CohSeries":
        if self.algebra is not other.algebra:
            raise SeriesError("mixing different algebras")
        order = min(self.order, other.order)
        out = {}
        for d in range(order + 1):
            s = self.slot(d) + other.slot(d)
            if not s.is_zero():
                out[d] = s
        return CohSeries(self.algebra, order, out)

    def __sub__(self, other: "CohSeries") -> "CohSeries":
        return self + (-other)

    def __neg__(self) -> "CohSeries":
        return CohSeries(self.algebra, self.order, {d: -v for d, v in self.slots.items()})

    def __mul__(self, other: "CohSeries") -> "CohSeries":
        if self.algebra is not other.algebra:
            raise SeriesError("mixing different algebras")
        order = min(self.order, other.order)
        out = {}
        for i, a in self.slots.items():
            if i > order:
                continue
            for j, b in other.slots.items():
                if i + j > order:
                    continue
                prod = a * b
                if i + j in out:
                    out[i + j] = out[i + j] + prod
                else:
                    out[i + j] = prod
        return CohSeries(self.algebra, order, out)

    def scale(self, scalar) -> "CohSeries":
        return CohSeries(self.algebra, self.order, {d: v.scale(scalar) for d, v in self.slots.items()})

    def elem_mul(self, elem: CohElement) -> "CohSeries":
        return CohSeries(self.algebra, self.order, {d: v.elem_mul(elem) for d, v in self.slots.items()})

    def apply(self, func) -> "CohSeries":
        return CohSeries(self.algebra, self.order, {d: v.apply(func) for d, v in self.slots.items()})

    def z_shift(self, s: int) -> "CohSeries":
        return CohSeries(self.algebra, self.order, {d: v.z_shift(s) for d, v in self.slots.items()})

    def substitute_neg_z(self) -> "CohSeries":
        return CohSeries(self.algebra, self.order, {d: v.substitute_neg_z() for d, v in self.slots.items()})

    def scale_q(self, factor) -> "CohSeries":
        f = as_fraction(factor)
        return CohSeries(
            self.algebra, self.order, {d: v.scale(f**d) for d, v in self.slots.items()}
        )

    def is_zero(self) -> bool:
        return not self.slots

    def __eq__(self, other):
        if not isinstance(other, CohSeries):
            return NotImplemented
        return (self - other).is_zero()

    def coefficient(self, d: int, zexp: int) -> CohElement:
        return self.slot(d).coefficient(zexp)

    def scalar_part(self, basis_index: int, zexp: int) -> UniSeries:
        """Extract the scalar q-series sitting at one (basis, z-exponent) slot."""
        return UniSeries(
            self.order,
            [self.slot(d).coefficient(zexp).coeffs[basis_index] for d in range(self.order + 1)],
        )

    def __repr__(self):
        bits = [f"q^{d}*({v!r})" for d, v in sorted(self.slots.items())]
        body = " + ".join(bits) if bits else "0"
        return f"{body} + O(q^{self.order + 1})"
