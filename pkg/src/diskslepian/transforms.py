"""Closed-form images of orthogonal bases under the weighted transforms.

Three families:

* ``lemma1_rhs`` -- the closed form of the finite Hankel transform of a
  Jacobi-weighted radial polynomial (script-J of a shifted order over a
  power); this identity carries no suspect constant and is verified against
  quadrature at 1e-9.

* ``disk_transform_closed`` -- the weighted Fourier image of a disk
  polynomial: C * (2/rho)^(nu+1) J_{nu+n+m+1}(rho) e^{i(n-m) vartheta}.

* ``gegenbauer2d_transform_closed`` -- the weighted Fourier image of a
  two-variable Gegenbauer polynomial P^{nu+1/2}_{n,k}:
  Z * rho^-(nu+1) J_{nu+n+1}(rho) sin(phi)^k C_{n-k}^{nu+k+1}(cos phi).

Constants policy: the printed prefactors of both 2D families fail their own
consistency anchor (the n=m=0 transform of the constant function must equal
the iterated-kernel value j_{nu+1}(rho), which pins C_{0,0} = Gamma(nu+2));
the shipped default is therefore a constant derived once per index family
from a single quadrature evaluation at a reference point, cached, and the
derived/printed ratio is attached to every result for logging.  The printed
constants stay available behind ``constant_source="paper"``.

Shape corrections relative to the printed statements (both forced by
constant-free two-point ratio tests and by the radial structure of the
angular reduction): the disk image carries the phase e^{i(n-m) vartheta} of
its operand, and the two-variable image carries rho^-(nu+1) (not rho^(k-n))
together with a sin(phi)^k factor, without which the image of a y-odd
polynomial would be even in phi.

Reference points for the constant derivation walk outward through a fixed
radius ladder until the Bessel factor exceeds 1e-3 in magnitude, so the
division never happens near a Bessel zero.
"""

import cmath
import math
import threading
from dataclasses import dataclass

import numpy as np

from .orthopoly import gegenbauer_c, jacobi_sequence
from .quadrature import disk_rule
from .specfun import bessel_j, gamma_fn, j_script

__all__ = ["ClosedFormResult", "lemma1_rhs", "disk_transform_closed",
           "gegenbauer2d_transform_closed", "disk_poly_on_rule",
           "gegenbauer2d_on_rule", "derived_constant"]

_REF_RADII = (1.3, 2.1, 3.7, 5.5, 8.0, 11.0, 15.5)
_REF_ANGLE = 0.7
_CONSTANT_RULE = (150, 256)

_cache = {}
_cache_lock = threading.Lock()


@dataclass(frozen=True)
class ClosedFormResult:
    """Closed-form transform value with constant provenance.

    ``discrepancy_log`` holds the derived/printed constant ratio whenever
    the derived constant is in use (None for constant_source="paper").
    """

    value: complex
    constant_source: str
    discrepancy_log: complex | None = None


def lemma1_rhs(alpha, beta, n, x):
    """Closed form of the finite Hankel transform of the Jacobi radial basis:

        2^beta Gamma(beta+n+1)/n! * scriptJ_{alpha+beta+2n+1}(x) / x^(beta+1)
    """
    if x <= 0:
        raise ValueError("lemma1_rhs requires x > 0")
    pref = 2.0 ** beta * gamma_fn(beta + n + 1) / math.factorial(n)
    return pref * j_script(alpha + beta + 2 * n + 1, x) / x ** (beta + 1)


def disk_poly_on_rule(n, m, nu, rule):
    """Disk polynomial values on all nodes of a DiskRule (vectorized)."""
    q, p = min(n, m), abs(n - m)
    pref = (-1.0) ** q * math.exp(
        math.lgamma(q + 1) + math.lgamma(nu + 1) - math.lgamma(nu + 1 + q))
    rad = jacobi_sequence(q, p, nu, 1.0 - 2.0 * rule.rs ** 2)[q]
    return pref * rule.rs ** p * np.exp(1j * (n - m) * rule.angles) * rad


def gegenbauer2d_on_rule(n, k, base, rule):
    """P^{base}_{n,k} values on all nodes of a DiskRule (vectorized)."""
    s = np.sqrt(1.0 - rule.xs ** 2)
    outer = gegenbauer_c(n - k, base + k + 0.5, rule.xs)
    inner = gegenbauer_c(k, base, rule.ys / s) if k > 0 else np.ones_like(s)
    return outer * s ** k * inner


def _disk_shape(nu, n, m, rho, vartheta):
    return ((2.0 / rho) ** (nu + 1) * bessel_j(nu + n + m + 1, rho)
            * cmath.exp(1j * (n - m) * vartheta))


def _gegen2d_shape(nu, n, k, rho, phi):
    return (rho ** (-(nu + 1.0)) * bessel_j(nu + n + 1, rho)
            * math.sin(phi) ** k * float(gegenbauer_c(n - k, nu + k + 1, math.cos(phi))))


def _paper_disk_constant(nu, n, m):
    q = min(n, m)
    return ((-1.0) ** m * (nu + 1) * 1j ** (n - m)
            * gamma_fn(q + 1) / gamma_fn(nu + q + 1))


def _paper_gegen2d_constant(nu, n, k):
    poch = math.exp(math.lgamma(2 * nu + 1 + n) - math.lgamma(2 * nu + 1))
    return (2.0 ** (nu + 1) * gamma_fn(nu + 1) * math.pi
            * (-1.0) ** n * poch / (1j ** k * math.factorial(2 * n)))


def _reference_point(order):
    for rho in _REF_RADII:
        if abs(bessel_j(order, rho)) >= 1e-3:
            return rho, _REF_ANGLE
    return _REF_RADII[-1], _REF_ANGLE


def derived_constant(family, nu, n, m):
    """Constant fixed by one quadrature evaluation at a reference point.

    Cached write-once per (family, nu, n, m); safe for concurrent readers.
    """
    key = (family, float(nu), int(n), int(m))
    val = _cache.get(key)
    if val is not None:
        return val
    rule = disk_rule(*_CONSTANT_RULE, float(nu))
    if family == "disk":
        rho, vth = _reference_point(nu + n + m + 1)
        vals = disk_poly_on_rule(n, m, nu, rule)
        shape = _disk_shape(nu, n, m, rho, vth)
    elif family == "gegen2d":
        rho, vth = _reference_point(nu + n + 1)
        vals = gegenbauer2d_on_rule(n, m, nu + 0.5, rule)
        shape = _gegen2d_shape(nu, n, m, rho, vth)
    else:
        raise ValueError(f"unknown transform family {family!r}")
    y = (rho * math.cos(vth), rho * math.sin(vth))
    phase = np.exp(1j * (rule.xs * y[0] + rule.ys * y[1]))
    quad = complex(np.sum(rule.weights * phase * vals))
    const = quad / shape
    with _cache_lock:
        val = _cache.setdefault(key, const)
    return val


def disk_transform_closed(nu, n, m, rho, vartheta, constant_source="derived"):
    """Closed-form weighted Fourier transform (c=1) of the disk polynomial
    D^nu_{n,m}, evaluated at y = (rho cos vartheta, rho sin vartheta)."""
    if rho <= 0:
        raise ValueError("rho must be > 0")
    shape = _disk_shape(nu, n, m, rho, vartheta)
    paper = _paper_disk_constant(nu, n, m)
    if constant_source == "paper":
        return ClosedFormResult(paper * shape, "paper")
    if constant_source != "derived":
        raise ValueError("constant_source must be 'derived' or 'paper'")
    const = derived_constant("disk", nu, n, m)
    return ClosedFormResult(const * shape, "derived", const / paper)


def gegenbauer2d_transform_closed(nu, n, k, rho, phi, constant_source="derived"):
    """Closed-form weighted Fourier transform (c=1, weight w_nu) of the
    two-variable Gegenbauer polynomial P^{nu+1/2}_{n,k} at
    y = (rho cos phi, rho sin phi)."""
    if rho <= 0:
        raise ValueError("rho must be > 0")
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    shape = _gegen2d_shape(nu, n, k, rho, phi)
    paper = _paper_gegen2d_constant(nu, n, k)
    if constant_source == "paper":
        return ClosedFormResult(paper * shape, "paper")
    if constant_source != "derived":
        raise ValueError("constant_source must be 'derived' or 'paper'")
    const = derived_constant("gegen2d", nu, n, k)
    return ClosedFormResult(const * shape, "derived", const / paper)
