"""Gaussian quadrature rules and the tensor polar rule for the disk weight.

All Gauss rules are produced by Golub-Welsch: eigen-decompose the Jacobi
matrix built from the three-term recurrence coefficients of the weight's
orthogonal polynomials.  Nodes are the eigenvalues; weights are
``mass * (first eigenvector component)**2``.

The radial weight (1-t^2)^nu on (0,1) is not a classical family (it is not
symmetric on its interval), so its recurrence coefficients are computed with
a discretized Stieltjes procedure run in extended precision:

* auxiliary measure: a Gauss-Jacobi rule with weight (1-s)^nu on (-1,1),
  mapped by t = (s+1)/2, absorbs the endpoint singularity at t=1 exactly;
  the leftover factor ((3+s)/2)^nu is analytic on [-1,1], so the auxiliary
  rule loses only a geometrically small (<< 1e-20) tail;
* the Stieltjes recursion itself runs in ``numpy.longdouble``: the monic
  polynomial norms decay like 16^-k and would leave the double range near
  k ~ 250, well inside the rule sizes used here.

Raw Hankel-determinant/Chebyshev moment recursions were rejected: with the
closed-form Beta moments they lose all significant digits beyond n ~ 20.

Rules are cached and immutable; evaluation is pure.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import SymTridiagonal, symtri_eigen
from .specfun import gamma_fn

__all__ = ["QuadratureRule", "DiskRule", "gauss_legendre", "gauss_jacobi",
           "radial_rule", "disk_rule"]

_LD = np.longdouble


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes/weights for a weighted 1D integral on ``domain``."""

    nodes: np.ndarray
    weights: np.ndarray
    domain: tuple
    weight_desc: str

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.shape != weights.shape or nodes.ndim != 1:
            raise ValueError("nodes/weights must be matching 1D arrays")
        if np.any(np.diff(nodes) <= 0):
            raise ValueError("nodes must be strictly increasing")
        lo, hi = self.domain
        if nodes[0] <= lo or nodes[-1] >= hi:
            raise ValueError("nodes must lie strictly inside the domain")
        if np.any(weights <= 0):
            raise ValueError("weights must be positive")
        nodes.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    def __len__(self):
        return len(self.nodes)

    def integrate(self, f):
        """Integrate a callable (vectorized over ndarray input) or an array
        of integrand values at the nodes."""
        vals = f(self.nodes) if callable(f) else np.asarray(f)
        return float(np.dot(self.weights, vals))


def _golub_welsch(alpha, beta, mass, domain, desc):
    """Gauss rule from monic recurrence coefficients alpha_k, beta_k (k>=1)."""
    n = len(alpha)
    off = np.sqrt(np.asarray(beta[1:n], dtype=float))
    T = SymTridiagonal(np.asarray(alpha, dtype=float), off)
    pairs = symtri_eigen(T, n)
    nodes = np.array([p.value for p in pairs])
    w = np.array([mass * p.vector[0] ** 2 for p in pairs])
    return QuadratureRule(nodes, w, domain, desc)


@lru_cache(maxsize=256)
def _jacobi_recurrence(n, a, b):
    """Monic recurrence coefficients for the weight (1-x)^a (1+x)^b on (-1,1).

    Returns (alpha[0:n], beta[0:n]) with beta[0] = total mass.
    """
    alpha = np.zeros(n)
    beta = np.zeros(n)
    apb = a + b
    alpha[0] = (b - a) / (apb + 2)
    beta[0] = 2.0 ** (apb + 1) * gamma_fn(a + 1) * gamma_fn(b + 1) / gamma_fn(apb + 2)
    if n > 1:
        alpha[1] = (b * b - a * a) / ((2 + apb) * (4 + apb))
        beta[1] = 4 * (a + 1) * (b + 1) / ((apb + 2) ** 2 * (apb + 3))
    for k in range(2, n):
        den = 2 * k + apb
        alpha[k] = (b * b - a * a) / (den * (den + 2))
        beta[k] = 4 * k * (k + a) * (k + b) * (k + apb) / (den * den * (den + 1) * (den - 1))
    return alpha, beta


@lru_cache(maxsize=128)
def gauss_legendre(n):
    """n-point Gauss-Legendre rule on (-1,1); exact to degree 2n-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    alpha, beta = _jacobi_recurrence(n, 0.0, 0.0)
    return _golub_welsch(alpha, beta, beta[0], (-1.0, 1.0), "1")


@lru_cache(maxsize=256)
def gauss_jacobi(n, a, b):
    """n-point Gauss-Jacobi rule on (-1,1) for weight (1-u)^a (1+u)^b."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if a <= -1 or b <= -1:
        raise ValueError("Jacobi weight needs a > -1 and b > -1")
    alpha, beta = _jacobi_recurrence(n, float(a), float(b))
    return _golub_welsch(alpha, beta, beta[0], (-1.0, 1.0),
                         f"(1-u)^{a}(1+u)^{b}")


def _radial_recurrence(n, nu):
    """Monic recurrence coefficients of the weight (1-t^2)^nu on (0,1)."""
    m = n + 25
    aux = gauss_jacobi(m, nu, 0.0)
    s = np.asarray(aux.nodes, dtype=_LD)
    t = (s + 1) / 2
    w = np.asarray(aux.weights, dtype=_LD) * ((3 + s) / 2) ** _LD(nu) / _LD(2.0) ** _LD(nu + 1)
    alpha = np.zeros(n, dtype=_LD)
    beta = np.zeros(n, dtype=_LD)
    p_prev = np.zeros_like(t)
    p_cur = np.ones_like(t)
    norm_prev = _LD(0.0)
    for k in range(n):
        norm_cur = np.dot(w, p_cur * p_cur)
        alpha[k] = np.dot(w, t * p_cur * p_cur) / norm_cur
        beta[k] = np.dot(w, np.ones_like(t)) if k == 0 else norm_cur / norm_prev
        p_next = (t - alpha[k]) * p_cur - (beta[k] if k > 0 else 0) * p_prev
        p_prev, p_cur = p_cur, p_next
        norm_prev = norm_cur
    return alpha.astype(float), beta.astype(float)


@lru_cache(maxsize=256)
def radial_rule(n, nu):
    """n-point Gauss rule on (0,1) for the weight (1-t^2)^nu, nu > -1.

    Exact (to roundoff) for polynomials of degree <= 2n-1 against the weight.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if nu <= -1:
        raise ValueError("radial weight needs nu > -1")
    alpha, beta = _radial_recurrence(n, float(nu))
    return _golub_welsch(alpha, beta, beta[0], (0.0, 1.0), f"(1-t^2)^{nu}")


def radial_mass(nu):
    """Closed-form total mass of (1-t^2)^nu on (0,1): a Beta integral."""
    return math.sqrt(math.pi) * gamma_fn(nu + 1) / (2 * gamma_fn(nu + 1.5))


@dataclass(frozen=True)
class DiskRule:
    """Tensor polar rule for the normalized disk weight
    w_nu = (nu+1)/pi * (1 - x^2 - y^2)^nu.

    ``weights`` already contain the radial measure factor r, the angular step
    and the (nu+1)/pi normalization, so a plain weighted sum of integrand
    values over (xs, ys) [or (rs, thetas)] gives the w_nu-integral over the
    disk.  Applying the rule to f = 1 returns 1 to roundoff.
    """

    radial: QuadratureRule
    thetas: np.ndarray
    nu: float
    rs: np.ndarray
    angles: np.ndarray
    xs: np.ndarray
    ys: np.ndarray
    weights: np.ndarray

    def integrate(self, f):
        """Integrate f(x, y) (vectorized) against w_nu over the unit disk."""
        return complex(np.sum(self.weights * f(self.xs, self.ys)))

    def integrate_polar(self, g):
        """Integrate g(r, theta) (vectorized) against w_nu over the disk."""
        return complex(np.sum(self.weights * g(self.rs, self.angles)))

    def integrate_values(self, vals):
        return complex(np.sum(self.weights * vals))


@lru_cache(maxsize=64)
def disk_rule(n_r, n_theta, nu):
    """Polar tensor rule: n_r radial Gauss points x n_theta uniform angles."""
    if n_r < 1 or n_theta < 1:
        raise ValueError("rule sizes must be >= 1")
    rad = radial_rule(n_r, nu)
    thetas = 2 * np.pi * np.arange(n_theta) / n_theta
    rs, angles = np.meshgrid(rad.nodes, thetas, indexing="ij")
    rs = rs.ravel()
    angles = angles.ravel()
    ws = (2.0 * (nu + 1) / n_theta) * np.repeat(rad.weights * rad.nodes, n_theta)
    xs = rs * np.cos(angles)
    ys = rs * np.sin(angles)
    for arr in (thetas, rs, angles, xs, ys, ws):
        arr.setflags(write=False)
    return DiskRule(rad, thetas, float(nu), rs, angles, xs, ys, ws)
