"""Second structure connection of P^n on the small locus, as exact matrices.

Conventions (all on the small quantum cohomology locus, q = e^t):

* quantum multiplication by H is the companion matrix with 1 on the
  subdiagonal and q in the upper-right corner; the Euler multiplication
  is E = (n+1) * (H bullet), and det(E - x) = +-((n+1)^{n+1} q - x^{n+1});
* the connection in the basis T_alpha = H^alpha reads
  nabla_t = d/dt + A_t, nabla_x = d/dx + A_x with
      A_t(sigma) =  (mu - 1/2 - sigma) (E - x)^{-1} (H bullet),
      A_x(sigma) = -(mu - 1/2 - sigma) (E - x)^{-1};
* the second metric is g(T_a, T_b) = integral of T_a (E - x)^{-1} T_b,
  flat between the parameters sigma and -sigma;
* the difference morphism Delta_sigma is the matrix A_x(sigma), a morphism
  from the sigma+1 connection to the sigma connection, and the total Delta
  is the signed (n+1)-fold composition down from sigma = (n-1)/2.

d/dt acts on q-polynomials as q d/dq throughout.
"""

from __future__ import annotations

from fractions import Fraction

from .polymat import MPoly, RatMat
from .rings import projective_space
from .scalars import as_fraction


def h_mult_matrix(n: int) -> RatMat:
    """Quantum multiplication by H on H*(P^n): subdiagonal 1, corner q."""
    size = n + 1
    nums = [[MPoly() for _ in range(size)] for _ in range(size)]
    for a in range(n):
        nums[a + 1][a] = MPoly.const(1)
    nums[0][n] = MPoly.var_q()
    return RatMat(nums)


def euler_mult_matrix(n: int) -> RatMat:
    """Multiplication by the Euler vector field, (n+1) * (H bullet)."""
    return h_mult_matrix(n).scale(n + 1)


def mu_shift_matrix(n: int, sigma) -> RatMat:
    """Diagonal matrix mu - 1/2 - sigma."""
    alg = projective_space(n)
    s = as_fraction(sigma)
    return RatMat.diagonal(
        [
            MPoly.const(alg.mu_eigenvalue(i) - Fraction(1, 2) - s)
            for i in range(n + 1)
        ]
    )


def resolvent(n: int) -> RatMat:
    """(E - x)^{-1} with the determinant as shared denominator."""
    size = n + 1
    e = euler_mult_matrix(n)
    xid = RatMat.diagonal([MPoly.var_x()] * size)
    return (e - xid).inverse()


def sigma_divisor(n: int) -> MPoly:
    """Reduced defining polynomial of the pole divisor, (n+1)^{n+1} q - x^{n+1}."""
    return MPoly.monomial((n + 1) ** (n + 1), 1, 0) - MPoly.monomial(1, 0, n + 1)


def ssc_connection(sigma, n: int) -> dict:
    """Connection matrices {"A_t": ..., "A_x": ...} for the given parameter."""
    shift = mu_shift_matrix(n, sigma)
    res = resolvent(n)
    a_x = -(shift * res)
    a_t = shift * res * h_mult_matrix(n)
    return {"A_t": a_t, "A_x": a_x}


def flatness_commutator(sigma, n: int) -> RatMat:
    """d/dt A_x - d/dx A_t + [A_t, A_x]; vanishes exactly for a flat pair."""
    conn = ssc_connection(sigma, n)
    a_t, a_x = conn["A_t"], conn["A_x"]
    return a_x.d_dt() - a_t.d_dx() + (a_t * a_x - a_x * a_t)


def second_metric(n: int) -> RatMat:
    """Gram matrix of the second metric in the basis H^alpha.

    The parameter sigma does not enter the matrix itself; it selects the
    pair of connections (sigma, -sigma) between which the metric is flat.
    """
    alg = projective_space(n)
    pairing = [
        [MPoly.const(c) for c in row] for row in alg.pairing_matrix()
    ]
    res = resolvent(n)
    return RatMat(pairing) * res


def metric_flatness_residual(sigma, n: int) -> dict:
    """Residuals of d g(s1,s2) = g(nabla^(sigma) s1, s2) + g(s1, nabla^(-sigma) s2).

    Returns {"t": RatMat, "x": RatMat}; both vanish exactly.
    """
    gram = second_metric(n)
    plus = ssc_connection(sigma, n)
    minus = ssc_connection(-as_fraction(sigma), n)
    out = {}
    for direction in ("t", "x"):
        d_gram = gram.d_dt() if direction == "t" else gram.d_dx()
        a_plus = plus[f"A_{direction}"]
        a_minus = minus[f"A_{direction}"]
        out[direction] = d_gram - a_plus.transpose() * gram - gram * a_minus
    return out


def delta(sigma, n: int) -> RatMat:
    """Difference morphism from the sigma+1 connection to the sigma connection."""
    return ssc_connection(sigma, n)["A_x"]


def delta_intertwining_residual(sigma, n: int) -> dict:
    """Residuals of nabla^(sigma) o Delta_sigma = Delta_sigma o nabla^(sigma+1)."""
    s = as_fraction(sigma)
    d_mat = delta(s, n)
    lower = ssc_connection(s, n)
    upper = ssc_connection(s + 1, n)
    return {
        "t": d_mat.d_dt() + lower["A_t"] * d_mat - d_mat * upper["A_t"],
        "x": d_mat.d_dx() + lower["A_x"] * d_mat - d_mat * upper["A_x"],
    }


def delta_total(n: int) -> RatMat:
    """Signed composition of all Delta_sigma, sigma = (n-1)/2 down to -(n+1)/2."""
    total = RatMat.identity(n + 1)
    sigma = Fraction(n - 1, 2)
    while sigma >= Fraction(-(n + 1), 2):
        total = delta(sigma, n) * total
        sigma -= 1
    if (n + 1) % 2:
        total = -total
    return total


def delta_total_rank(n: int) -> int:
    return delta_total(n).rank()


def rho_mult_rank(n: int) -> int:
    """Rank of classical multiplication by rho = (n+1) H, the comparison value."""
    alg = projective_space(n)
    rho = alg.basis(1).scale(Fraction(n + 1))
    mat = [[MPoly.const(c) for c in row] for row in alg.multiplication_matrix(rho)]
    return RatMat(mat).rank()


def quintic_reference_connection(sigma) -> dict:
    """Hard-coded reference matrices for n = 4 in the published layout.

    Rows of the resolvent numerator follow the cyclic pattern
    row_i = (5^{i} x^{4-i}, ..., x^4, 5^4 q, 5^3 q x, ...); the t-matrix
    is that numerator times the H-multiplication companion matrix.  Both
    carry the diagonal mu - 1/2 - sigma on the left and the denominator
    5^5 q - x^5.
    """
    size = 5
    den = MPoly.monomial(5**5, 1, 0) - MPoly.monomial(1, 0, 5)

    # direct tables, matching the published 5x5 displays entry for entry
    def q(c, a, b):
        return MPoly.monomial(c, a, b)
    n_x = [
        [q(1, 0, 4), q(625, 1, 0), q(125, 1, 1), q(25, 1, 2), q(5, 1, 3)],
        [q(5, 0, 3), q(1, 0, 4), q(625, 1, 0), q(125, 1, 1), q(25, 1, 2)],
        [q(25, 0, 2), q(5, 0, 3), q(1, 0, 4), q(625, 1, 0), q(125, 1, 1)],
        [q(125, 0, 1), q(25, 0, 2), q(5, 0, 3), q(1, 0, 4), q(625, 1, 0)],
        [q(625, 0, 0), q(125, 0, 1), q(25, 0, 2), q(5, 0, 3), q(1, 0, 4)],
    ]
    n_t = [
        [q(625, 1, 0), q(125, 1, 1), q(25, 1, 2), q(5, 1, 3), q(1, 1, 4)],
        [q(1, 0, 4), q(625, 1, 0), q(125, 1, 1), q(25, 1, 2), q(5, 1, 3)],
        [q(5, 0, 3), q(1, 0, 4), q(625, 1, 0), q(125, 1, 1), q(25, 1, 2)],
        [q(25, 0, 2), q(5, 0, 3), q(1, 0, 4), q(625, 1, 0), q(125, 1, 1)],
        [q(125, 0, 1), q(25, 0, 2), q(5, 0, 3), q(1, 0, 4), q(625, 1, 0)],
    ]
    shift = [Fraction(i - 2) - Fraction(1, 2) - as_fraction(sigma) for i in range(size)]
    a_t = RatMat(
        [[MPoly.const(shift[i]) * n_t[i][j] for j in range(size)] for i in range(size)],
        den,
    )
    a_x = RatMat(
        [[MPoly.const(-shift[i]) * n_x[i][j] for j in range(size)] for i in range(size)],
        den,
    )
    return {"A_t": a_t, "A_x": a_x}
