"""Orthogonal polynomial families used by the disk spectral method.

Jacobi and Gegenbauer polynomials, complex disk (Zernike-type) polynomials,
two-variable Gegenbauer polynomials, and the radial basis

    t_basis:  T_{N,n}(x) = x^(N+1/2) * R_{N,n}(x),
              R_{N,n}(x) = N! n!/(n+N)! * P_n^{(N,nu)}(1 - 2 x^2),

which diagonalizes the radial differential operator at zero bandwidth.  All
evaluation goes through three-term recurrences; hypergeometric sums appear
only in test oracles.

Two printed-formula corrections are baked in (both are forced by the
orthogonality/quadrature checks in the test suite):

* the disk polynomial carries the radial factor r^|n-m| (without it the
  function is not a polynomial in x, y and the Zernike orthogonality fails);
* the inner argument of the two-variable Gegenbauer is y / sqrt(1 - x^2)
  (the variant with the roles of x and y mixed is inconsistent with the
  polar substitution x = cos(theta), y = cos(phi) sin(theta)).

The x^2-multiplication coefficients for the T basis are derived from the
Jacobi three-term recurrence under u = 1 - 2 x^2 rather than transcribed,
so they are finite for every index (a naive b_0 is 0/0 when N = nu) and
satisfy the self-adjointness identity a_n h_{n+1} = c_{n+1} h_n exactly.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = ["JacobiIndex", "TBasisIndex", "jacobi_p", "gegenbauer_c",
           "disk_poly", "disk_poly_norm", "gegenbauer2d",
           "t_basis", "t_norm_sq", "x2_recurrence_coeffs"]


@dataclass(frozen=True)
class JacobiIndex:
    n: int
    alpha: float
    beta: float

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Jacobi degree must be >= 0")
        if self.alpha <= -1 or self.beta <= -1:
            raise ValueError("Jacobi parameters must exceed -1")


@dataclass(frozen=True)
class TBasisIndex:
    N: int
    n: int
    nu: float

    def __post_init__(self):
        if self.N < 0 or self.n < 0:
            raise ValueError("T-basis indices must be >= 0")
        if self.nu <= -1:
            raise ValueError("T-basis weight exponent must exceed -1")


def jacobi_sequence(nmax, a, b, u):
    """All Jacobi values P_0..P_nmax at u via the three-term recurrence.

    ``u`` may be a scalar or ndarray; returns an array of shape
    (nmax+1,) + shape(u).
    """
    u = np.asarray(u, dtype=np.result_type(u, float))
    out = np.empty((nmax + 1,) + u.shape, dtype=u.dtype)
    out[0] = 1.0
    if nmax == 0:
        return out
    out[1] = (a + 1) + (a + b + 2) * (u - 1) / 2
    for n in range(1, nmax):
        c1 = 2 * (n + 1) * (n + a + b + 1) * (2 * n + a + b)
        c2 = (2 * n + a + b + 1) * (a * a - b * b)
        c3 = (2 * n + a + b) * (2 * n + a + b + 1) * (2 * n + a + b + 2)
        c4 = 2 * (n + a) * (n + b) * (2 * n + a + b + 2)
        out[n + 1] = ((c2 + c3 * u) * out[n] - c4 * out[n - 1]) / c1
    return out


def jacobi_p(idx, x):
    """Jacobi polynomial P_n^{(alpha,beta)}(x) by three-term recurrence."""
    return float(jacobi_sequence(idx.n, idx.alpha, idx.beta, float(x))[idx.n])


def gegenbauer_c(n, order, x):
    """Gegenbauer polynomial C_n^order(x); requires order > -1/2, order != 0.

    The order = 0 limit needs a rescaled (Chebyshev) normalization that the
    disk constructions never exercise, so it is rejected.
    """
    if n < 0:
        raise ValueError("Gegenbauer degree must be >= 0")
    if order == 0:
        raise ValueError("Gegenbauer order 0 is excluded (normalization "
                         "convention is ambiguous)")
    if order <= -0.5:
        raise ValueError("Gegenbauer order must exceed -1/2")
    x = np.asarray(x, dtype=np.result_type(x, float))
    prev = np.ones_like(x)
    if n == 0:
        return prev if prev.ndim else float(prev)
    cur = 2 * order * x
    for k in range(1, n):
        prev, cur = cur, (2 * (k + order) * x * cur - (k + 2 * order - 1) * prev) / (k + 1)
    return cur if cur.ndim else float(cur)


def _pochhammer_ratio_log(m, nu):
    """log( m! / (nu+1)_m )."""
    return (math.lgamma(m + 1) + math.lgamma(nu + 1) - math.lgamma(nu + 1 + m))


def disk_poly(n, m, nu, r, theta):
    """Disk (Zernike-type) polynomial D^nu_{n,m} at polar (r, theta).

    D^nu_{n,m} = (-1)^q q!/(nu+1)_q * r^|n-m| e^{i(n-m)theta}
                 * P_q^{(|m-n|, nu)}(1 - 2 r^2),          q = min(n, m).

    The r^|n-m| factor makes D a genuine polynomial in (x, y), and the
    prefactor uses the index-symmetric q = min(n, m): both choices are
    pinned by the orthogonality relation <D_{n,m}, D_{l,k}> =
    delta delta / pi^nu_{m,n}, which fails under quadrature without them.
    """
    if n < 0 or m < 0:
        raise ValueError("disk polynomial indices must be >= 0")
    if nu <= -1:
        raise ValueError("disk weight exponent must exceed -1")
    q = min(n, m)
    p = abs(n - m)
    pref = (-1.0) ** q * math.exp(_pochhammer_ratio_log(q, nu))
    rad = jacobi_sequence(q, p, nu, 1.0 - 2.0 * float(r) ** 2)[q]
    return pref * float(r) ** p * cmath.exp(1j * (n - m) * theta) * float(rad)


def disk_poly_norm(n, m, nu):
    """Squared norm <D_{n,m}, D_{n,m}>_nu = 1 / pi^nu_{m,n}."""
    if n < 0 or m < 0 or nu <= -1:
        raise ValueError("invalid disk polynomial index")
    log_val = (math.log(nu + 1) - math.log(m + n + nu + 1)
               + _pochhammer_ratio_log(n, nu) + _pochhammer_ratio_log(m, nu))
    return math.exp(log_val)


def gegenbauer2d(n, k, nu, x, y):
    """Two-variable Gegenbauer polynomial
    P^nu_{n,k}(x, y) = C_{n-k}^{nu+k+1/2}(x) (1-x^2)^{k/2} C_k^nu(y / sqrt(1-x^2)).

    Requires 0 <= k <= n and |x| < 1.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if abs(x) >= 1:
        raise ValueError("gegenbauer2d requires |x| < 1")
    s = math.sqrt(1.0 - x * x)
    outer = gegenbauer_c(n - k, nu + k + 0.5, x)
    inner = gegenbauer_c(k, nu, y / s) if k > 0 else 1.0
    return float(outer) * s ** k * float(inner)


def _log_r_const(N, n):
    """log of the R normalization N! n! / (n+N)!."""
    return math.lgamma(N + 1) + math.lgamma(n + 1) - math.lgamma(n + N + 1)


def t_basis(idx, x):
    """Radial basis T^nu_{N,n}(x) = x^(N+1/2) R_{N,n}(x) on (0, 1].

    Returns the continuous limit 0 at x = 0.  ``x`` may be an ndarray.
    """
    N, n, nu = idx.N, idx.n, idx.nu
    x = np.asarray(x, dtype=float)
    if np.any(x < 0) or np.any(x > 1):
        raise ValueError("t_basis requires 0 <= x <= 1")
    c = math.exp(_log_r_const(N, n))
    rad = jacobi_sequence(n, N, nu, 1.0 - 2.0 * x * x)[n]
    out = c * x ** (N + 0.5) * rad
    return out if out.ndim else float(out)


def t_norm_sq(idx):
    """h_{N,n} = integral_0^1 T^2 (1-x^2)^nu dx.

    Derived from the Jacobi orthogonality under u = 1 - 2x^2; the derivation
    is itself pinned by quadrature in the tests.
    """
    N, n, nu = idx.N, idx.n, idx.nu
    log_h = (2 * math.lgamma(N + 1) + math.lgamma(n + 1) + math.lgamma(n + nu + 1)
             - math.log(2) - math.log(2 * n + N + nu + 1)
             - math.lgamma(n + N + 1) - math.lgamma(n + N + nu + 1))
    return math.exp(log_h)


def x2_recurrence_coeffs(idx):
    """Coefficients (a, b, c) with x^2 T_{N,n} = a T_{N,n+1} + b T_{N,n} + c T_{N,n-1}.

    Obtained from the Jacobi multiplication recurrence
    u P_n = A_n P_{n+1} + B_n P_n + C_n P_{n-1} under u = 1 - 2 x^2 together
    with the degree-dependent R normalization; c = 0 for n = 0 by convention.
    """
    N, n, nu = idx.N, idx.n, idx.nu
    s = 2 * n + N + nu
    a = -(n + N + 1) * (n + N + nu + 1) / ((s + 1) * (s + 2))
    if n == 0:
        b_jac = (nu - N) / (N + nu + 2)
        c = 0.0
    else:
        b_jac = (nu * nu - N * N) / (s * (s + 2))
        c = -n * (n + nu) / (s * (s + 1))
    b = 0.5 * (1.0 - b_jac)
    return a, b, c
