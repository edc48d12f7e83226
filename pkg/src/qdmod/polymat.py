"""Exact polynomial and rational-function matrix arithmetic in (q, x).

``MPoly`` is a sparse Laurent polynomial in q and x with an optional third
variable s (used for the connection parameter when operators are built
symbolically); coefficients are exact rationals.  ``RatMat`` is a square
matrix of polynomials over a single shared denominator, which is the shape
every second-structure object takes: the resolvent (E*bullet - x)^{-1} has
the determinant as its only denominator, and sums/products preserve the
shape.

Rank over the rational-function field is computed by fraction-free
(Bareiss) elimination; nullspaces are assembled from Cramer minors so no
rational-function division is ever performed.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .scalars import as_fraction


class PolyError(ValueError):
    pass


class MPoly:
    """Sparse Laurent polynomial: {(q_exp, x_exp, s_exp): Fraction}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for key, value in terms.items():
                v = as_fraction(value)
                if v:
                    data[(int(key[0]), int(key[1]), int(key[2]))] = v
        self.terms = data

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def const(value) -> "MPoly":
        return MPoly({(0, 0, 0): value})

    @staticmethod
    def monomial(value, qe: int = 0, xe: int = 0, se: int = 0) -> "MPoly":
        return MPoly({(qe, xe, se): value})

    @staticmethod
    def var_q() -> "MPoly":
        return MPoly({(1, 0, 0): 1})

    @staticmethod
    def var_x() -> "MPoly":
        return MPoly({(0, 1, 0): 1})

    @staticmethod
    def var_s() -> "MPoly":
        return MPoly({(0, 0, 1): 1})

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        other = _lift_poly(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, Fraction(0)) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = _lift_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _lift_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _lift_poly(other)
        if other is None:
            return NotImplemented
        out = {}
        for (a1, b1, c1), u in self.terms.items():
            for (a2, b2, c2), v in other.terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                s = out.get(key, Fraction(0)) + u * v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        out = MPoly.const(1)
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other):
        other = _lift_poly(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # -- calculus and substitution ----------------------------------------------

    def d_dq(self) -> "MPoly":
        return MPoly(
            {(a - 1, b, c): v * a for (a, b, c), v in self.terms.items() if a}
        )

    def d_dt(self) -> "MPoly":
        """q d/dq, the t-derivative with q = e^t (exact on Laurent terms)."""
        return MPoly({k: v * k[0] for k, v in self.terms.items() if k[0]})

    def d_dx(self) -> "MPoly":
        return MPoly(
            {(a, b - 1, c): v * b for (a, b, c), v in self.terms.items() if b}
        )

    def substitute_s(self, value) -> "MPoly":
        sigma = as_fraction(value)
        out = MPoly()
        for (a, b, c), v in self.terms.items():
            out = out + MPoly({(a, b, 0): v * sigma**c})
        return out

    def eval_q0(self) -> "MPoly":
        """Set q = 0 (drops positive q-powers; rejects genuine poles in q)."""
        if any(a < 0 for (a, _, _) in self.terms):
            raise PolyError("eval_q0 on a Laurent polynomial with q-poles")
        return MPoly({k: v for k, v in self.terms.items() if k[0] == 0})

    def substitute(self, q=None, x=None):
        """Numeric/rational evaluation; returns a Fraction when both are given."""
        total = Fraction(0)
        for (a, b, c), v in self.terms.items():
            if c:
                raise PolyError("cannot evaluate with symbolic parameter present")
            term = v
            term = term * Fraction(q) ** a if q is not None else term
            term = term * Fraction(x) ** b if x is not None else term
            total += term
        return total

    def has_s(self) -> bool:
        return any(c for (_, _, c) in self.terms)

    def min_exponents(self):
        if not self.terms:
            return (0, 0, 0)
        return tuple(min(k[i] for k in self.terms) for i in range(3))

    def max_exponents(self):
        if not self.terms:
            return (0, 0, 0)
        return tuple(max(k[i] for k in self.terms) for i in range(3))

    def shift(self, qe: int = 0, xe: int = 0) -> "MPoly":
        return MPoly({(a + qe, b + xe, c): v for (a, b, c), v in self.terms.items()})

    def content(self) -> Fraction:
        """Positive rational content (gcd of coefficients)."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for v in self.terms.values():
            num = gcd(num, v.numerator)
            den = den * v.denominator // gcd(den, v.denominator)
        return Fraction(num, den)

    def leading_key(self):
        """Lexicographically largest monomial key, for exact division."""
        return max(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, b, c), v in sorted(self.terms.items()):
            mono = "".join(
                f"*{name}^{e}"
                for name, e in (("q", a), ("x", b), ("s", c))
                if e
            )
            bits.append(f"({v}){mono}")
        return " + ".join(bits)


def _lift_poly(value):
    if isinstance(value, MPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return MPoly.const(value)
    return None


def exact_div(num: MPoly, den: MPoly) -> MPoly:
    """Exact polynomial division (raises if not divisible); used by Bareiss."""
    if den.is_zero():
        raise PolyError("division by zero polynomial")
    rem = MPoly(dict(num.terms))
    lead = den.leading_key()
    lead_c = den.terms[lead]
    out = {}
    while rem.terms:
        rk = rem.leading_key()
        key = (rk[0] - lead[0], rk[1] - lead[1], rk[2] - lead[2])
        coeff = rem.terms[rk] / lead_c
        out[key] = coeff
        rem = rem - den * MPoly({key: coeff})
    return MPoly(out)


# -- polynomial matrices -------------------------------------------------------


def poly_mat_mul(a, b):
    rows, mid, cols = len(a), len(b), len(b[0])
    return [
        [
            sum((a[i][k] * b[k][j] for k in range(mid)), MPoly())
            for j in range(cols)
        ]
        for i in range(rows)
    ]


def poly_det(matrix) -> MPoly:
    """Determinant by cofactor expansion along the sparsest column."""
    size = len(matrix)
    if size == 0:
        return MPoly.const(1)
    if size == 1:
        return matrix[0][0]
    col = min(
        range(size), key=lambda j: sum(0 if matrix[i][j].is_zero() else 1 for i in range(size))
    )
    total = MPoly()
    for i in range(size):
        entry = matrix[i][col]
        if entry.is_zero():
            continue
        minor = [
            [matrix[r][c] for c in range(size) if c != col]
            for r in range(size)
            if r != i
        ]
        cof = poly_det(minor)
        if (i + col) % 2:
            cof = -cof
        total = total + entry * cof
    return total


def poly_adjugate(matrix):
    size = len(matrix)
    adj = [[MPoly() for _ in range(size)] for _ in range(size)]
    for i in range(size):
        for j in range(size):
            minor = [
                [matrix[r][c] for c in range(size) if c != i]
                for r in range(size)
                if r != j
            ]
            cof = poly_det(minor)
            if (i + j) % 2:
                cof = -cof
            adj[i][j] = cof
    return adj


def poly_rank(matrix) -> int:
    """Rank over Frac(Q[q,x,s]) by fraction-free Gaussian elimination."""
    m = [list(row) for row in matrix]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = MPoly.const(1)
    pivot_row = 0
    for col in range(cols):
        pr = next((r for r in range(pivot_row, rows) if not m[r][col].is_zero()), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        pivot = m[pivot_row][col]
        for r in range(pivot_row + 1, rows):
            for c in range(col + 1, cols):
                m[r][c] = exact_div(pivot * m[r][c] - m[r][col] * m[pivot_row][c], prev)
            m[r][col] = MPoly()
        prev = pivot
        pivot_row += 1
        rank += 1
        if pivot_row == rows:
            break
    return rank


def poly_nullspace(matrix):
    """Kernel basis over the rational-function field, as polynomial vectors.

    Uses Cramer minors on a maximal nonsingular pivot submatrix, so the
    result is exact and division-free.  Rows may be redundant.
    """
    rows = [list(r) for r in matrix]
    cols = len(rows[0]) if rows else 0
    # find independent rows/pivot columns by rank-increment testing
    chosen_rows = []
    pivot_cols = []
    for ri, row in enumerate(rows):
        trial = [rows[i] for i in chosen_rows] + [row]
        if poly_rank(trial) > len(chosen_rows):
            chosen_rows.append(ri)
    sub = [rows[i] for i in chosen_rows]
    r = len(sub)
    for c in range(cols):
        trial_cols = pivot_cols + [c]
        trial = [[sub[i][j] for j in trial_cols] for i in range(r)]
        if poly_rank(trial) > len(pivot_cols):
            pivot_cols.append(c)
    if len(pivot_cols) != r:
        raise PolyError("rank bookkeeping failed")
    pivot_set = set(pivot_cols)
    base = [[sub[i][j] for j in pivot_cols] for i in range(r)]
    base_det = poly_det(base)
    kernel = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vec = [MPoly() for _ in range(cols)]
        vec[free] = base_det
        rhs = [sub[i][free] for i in range(r)]
        for i, pc in enumerate(pivot_cols):
            replaced = [
                [rhs[k] if j == i else base[k][j] for j in range(r)]
                for k in range(r)
            ]
            vec[pc] = -poly_det(replaced)
        kernel.append(_strip_vector_content(vec))
    return kernel


def _strip_vector_content(vec):
    nonzero = [p for p in vec if not p.is_zero()]
    if not nonzero:
        return vec
    qmin = min(p.min_exponents()[0] for p in nonzero)
    xmin = min(p.min_exponents()[1] for p in nonzero)
    content = None
    for p in nonzero:
        c = p.content()
        content = c if content is None else Fraction(
            gcd(content.numerator, c.numerator),
            (content.denominator * c.denominator)
            // gcd(content.denominator, c.denominator),
        )
    inv = Fraction(1) / content if content else Fraction(1)
    return [p.shift(-qmin, -xmin) * MPoly.const(inv) for p in vec]


class RatMat:
    """Square matrix of polynomials over one shared denominator."""

    __slots__ = ("size", "nums", "den")

    def __init__(self, nums, den=None):
        self.nums = [list(row) for row in nums]
        self.size = len(self.nums)
        if any(len(row) != self.size for row in self.nums):
            raise PolyError("matrix must be square")
        self.den = den if den is not None else MPoly.const(1)
        if self.den.is_zero():
            raise PolyError("zero denominator")

    @staticmethod
    def identity(size: int) -> "RatMat":
        return RatMat(
            [[MPoly.const(int(i == j)) for j in range(size)] for i in range(size)]
        )

    @staticmethod
    def zero(size: int) -> "RatMat":
        return RatMat([[MPoly() for _ in range(size)] for _ in range(size)])

    @staticmethod
    def diagonal(values) -> "RatMat":
        vals = [_lift_poly(v) for v in values]
        size = len(vals)
        return RatMat(
            [[vals[i] if i == j else MPoly() for j in range(size)] for i in range(size)]
        )

    def entry(self, i: int, j: int):
        """Entry as a (numerator, denominator) pair."""
        return (self.nums[i][j], self.den)

    def __add__(self, other: "RatMat") -> "RatMat":
        if self.den == other.den:
            return RatMat(
                [
                    [self.nums[i][j] + other.nums[i][j] for j in range(self.size)]
                    for i in range(self.size)
                ],
                self.den,
            ).reduce()
        return RatMat(
            [
                [
                    self.nums[i][j] * other.den + other.nums[i][j] * self.den
                    for j in range(self.size)
                ]
                for i in range(self.size)
            ],
            self.den * other.den,
        ).reduce()

    def __sub__(self, other: "RatMat") -> "RatMat":
        return self + (-other)

    def __neg__(self) -> "RatMat":
        return RatMat([[-p for p in row] for row in self.nums], self.den)

    def __mul__(self, other: "RatMat") -> "RatMat":
        return RatMat(poly_mat_mul(self.nums, other.nums), self.den * other.den).reduce()

    def scale(self, value) -> "RatMat":
        p = _lift_poly(value)
        return RatMat([[p * e for e in row] for row in self.nums], self.den)

    def transpose(self) -> "RatMat":
        return RatMat(
            [[self.nums[j][i] for j in range(self.size)] for i in range(self.size)],
            self.den,
        )

    def d_dt(self) -> "RatMat":
        """Entry-wise q d/dq via the quotient rule."""
        dden = self.den.d_dt()
        return RatMat(
            [
                [e.d_dt() * self.den - e * dden for e in row]
                for row in self.nums
            ],
            self.den * self.den,
        ).reduce()

    def d_dx(self) -> "RatMat":
        dden = self.den.d_dx()
        return RatMat(
            [
                [e.d_dx() * self.den - e * dden for e in row]
                for row in self.nums
            ],
            self.den * self.den,
        ).reduce()

    def det(self):
        """Determinant as a (numerator, denominator) pair of polynomials."""
        return (poly_det(self.nums), self.den ** self.size)

    def inverse(self) -> "RatMat":
        det = poly_det(self.nums)
        if det.is_zero():
            raise PolyError("matrix not invertible over the function field")
        adj = poly_adjugate(self.nums)
        return RatMat([[self.den * e for e in row] for row in adj], det).reduce()

    def rank(self) -> int:
        return poly_rank(self.nums)

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.nums for p in row)

    def __eq__(self, other):
        if not isinstance(other, RatMat):
            return NotImplemented
        if self.size != other.size:
            return False
        return all(
            self.nums[i][j] * other.den == other.nums[i][j] * self.den
            for i in range(self.size)
            for j in range(self.size)
        )

    def reduce(self) -> "RatMat":
        """Strip common monomial and rational content; keeps growth in check."""
        entries = [p for row in self.nums for p in row if not p.is_zero()]
        if not entries:
            return RatMat([[MPoly() for _ in row] for row in self.nums], MPoly.const(1))
        pool = entries + [self.den]
        qmin = min(p.min_exponents()[0] for p in pool)
        xmin = min(p.min_exponents()[1] for p in pool)
        content = None
        for p in pool:
            c = p.content()
            content = c if content is None else Fraction(
                gcd(content.numerator, c.numerator),
                (content.denominator * c.denominator)
                // gcd(content.denominator, c.denominator),
            )
        inv = Fraction(1) / content
        scale = MPoly.monomial(inv, -qmin, -xmin)
        return RatMat(
            [[p * scale for p in row] for row in self.nums], self.den * scale
        )

    def apply_vector(self, vec, vec_den):
        """Apply to a vector given as (list of MPoly, shared denominator)."""
        out = [
            sum((self.nums[i][j] * vec[j] for j in range(self.size)), MPoly())
            for i in range(self.size)
        ]
        return out, self.den * vec_den

    def __repr__(self):
        lines = [
            "[" + ", ".join(repr(p) for p in row) + "]" for row in self.nums
        ]
        return "RatMat(den=%r,\n  %s)" % (self.den, ",\n  ".join(lines))


# -- serialization ---------------------------------------------------------------


def mpoly_to_list(poly: MPoly):
    """[[q_exp, x_exp, "p/q"], ...] in sorted monomial order (s-free only)."""
    out = []
    for (a, b, c), v in sorted(poly.terms.items()):
        if c:
            raise PolyError("cannot serialize a polynomial with symbolic parameter")
        out.append([a, b, str(v)])
    return out


def mpoly_from_list(data) -> MPoly:
    return MPoly({(int(a), int(b), 0): Fraction(v) for a, b, v in data})


def ratmat_to_dict(mat: RatMat) -> dict:
    return {
        "size": mat.size,
        "den": mpoly_to_list(mat.den),
        "num": [[mpoly_to_list(p) for p in row] for row in mat.nums],
    }


def ratmat_from_dict(data) -> RatMat:
    return RatMat(
        [[mpoly_from_list(cell) for cell in row] for row in data["num"]],
        mpoly_from_list(data["den"]),
    )


def format_mpoly(poly: MPoly) -> str:
    if poly.is_zero():
        return "0"
    bits = []
    for (a, b, c), v in sorted(poly.terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
        mono = "".join(
            (f"*{nm}" if e == 1 else f"*{nm}^{e}")
            for nm, e in (("q", a), ("x", b), ("s", c))
            if e
        )
        if v == 1 and mono:
            bits.append(mono[1:])
        elif v == -1 and mono:
            bits.append("-" + mono[1:])
        else:
            bits.append(f"{v}{mono}")
    return " + ".join(bits).replace("+ -", "- ")


def format_ratmat(mat: RatMat, name: str = "M") -> str:
    width = max(
        len(format_mpoly(p)) for row in mat.nums for p in row
    )
    lines = [f"{name} = 1/({format_mpoly(mat.den)}) *"]
    for row in mat.nums:
        cells = ", ".join(format_mpoly(p).rjust(width) for p in row)
        lines.append(f"  [{cells}]")
    return "\n".join(lines)
