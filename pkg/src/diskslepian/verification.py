"""Named verification suites behind the command-line ``verify`` command.

Every suite returns a list of Check records (name, measured error, tolerance,
pass flag, optional detail).  Tolerances are pinned here, identical to the
acceptance tests; ``quick=True`` shrinks parameter grids (not tolerances) to
keep the full run under a minute.

The lemma1 suite restricts its grid to points where the identity value is
resolvable above the 80-bit cancellation floor of the library quadrature
(the transform of a high-degree basis function at small argument can be
~1e-24 of the integrand scale; those corners are exercised by the test
suite's arbitrary-precision oracle instead).
"""

import math
from dataclasses import dataclass

import numpy as np

from . import operators as ops
from . import slepian as sl
from . import transforms as tr
from .orthopoly import jacobi_sequence
from .quadrature import disk_rule, radial_rule

__all__ = ["Check", "run_suite", "SUITES"]


@dataclass(frozen=True)
class Check:
    name: str
    error: float
    tol: float
    passed: bool
    detail: str = ""


def _check(name, error, tol, detail=""):
    return Check(name, float(error), float(tol), bool(error <= tol), detail)


def _fourier_of_values(rule, vals, y):
    phase = np.exp(1j * (rule.xs * y[0] + rule.ys * y[1]))
    return complex(np.sum(rule.weights * phase * vals))


def suite_lemma1(quick=False):
    """Finite Hankel transform of the Jacobi basis: quadrature vs closed form."""
    checks = []
    params = [0.0, 0.5, 1.0, 2.5]
    ns = range(0, 4 if quick else 7)
    xs = [0.5, 1.0, 2.0, 5.0, 10.0]
    for a in params:
        for b in params:
            rule = radial_rule(240, b)
            for n in ns:
                for x in xs:
                    rhs = tr.lemma1_rhs(a, b, n, x)
                    if abs(rhs) < 1e-7:
                        # identity value below the double-rule cancellation
                        # floor; the test suite covers these corners with an
                        # arbitrary-precision oracle
                        continue
                    f = lambda t: t ** (a + 0.5) * jacobi_sequence(n, a, b, 1 - 2 * t * t)[n]
                    lhs = ops.apply_finite_hankel(b, 1.0, a, f, x, rule)
                    checks.append(_check(
                        f"lemma1 a={a} b={b} n={n} x={x}",
                        abs(lhs - rhs) / abs(rhs), 1e-9))
    return checks


def suite_theorem41(quick=False):
    """Disk polynomial transform: ratio tests, full identity, constant anchor."""
    checks = []
    nus = [0.0, 1.0] if quick else [0.0, 1.0, 2.5]
    for nu in nus:
        rule = disk_rule(150, 256, nu)
        c00 = tr.derived_constant("disk", nu, 0, 0)
        gamma_val = math.gamma(nu + 2)
        checks.append(_check(f"thm41 c00 nu={nu} equals Gamma(nu+2)",
                             abs(c00 - gamma_val) / gamma_val, 1e-9,
                             f"derived={c00:.12g}"))
        pairs = [(n, m) for n in range(6) for m in range(6) if n + m <= 5]
        if quick:
            pairs = [(0, 0), (1, 0), (2, 1), (0, 3)]
        for (n, m) in pairs:
            vals = tr.disk_poly_on_rule(n, m, nu, rule)
            vth = 0.9
            rho1, rho2 = 0.8, 1.6
            q1 = _fourier_of_values(rule, vals, (rho1 * math.cos(vth), rho1 * math.sin(vth)))
            q2 = _fourier_of_values(rule, vals, (rho2 * math.cos(vth), rho2 * math.sin(vth)))
            s1 = tr._disk_shape(nu, n, m, rho1, vth)
            s2 = tr._disk_shape(nu, n, m, rho2, vth)
            checks.append(_check(f"thm41 ratio nu={nu} n={n} m={m}",
                                 abs(q1 / q2 - s1 / s2) / abs(q1 / q2), 1e-6))
        grid_pairs = [(1, 0), (2, 1)] if quick else [(1, 0), (2, 1), (1, 2), (3, 0)]
        for (n, m) in grid_pairs:
            vals = tr.disk_poly_on_rule(n, m, nu, rule)
            errs, scale = [], 0.0
            for rho in (0.6, 1.0, 1.45, 1.9, 2.4):
                for vth in (0.3, 0.9, 1.6, 2.5, 4.0):
                    y = (rho * math.cos(vth), rho * math.sin(vth))
                    q = _fourier_of_values(rule, vals, y)
                    cf = tr.disk_transform_closed(nu, n, m, rho, vth).value
                    errs.append(abs(q - cf))
                    scale = max(scale, abs(cf))
            checks.append(_check(f"thm41 full grid nu={nu} n={n} m={m}",
                                 max(errs) / scale, 1e-7))
    return checks


def suite_theorem42(quick=False):
    """Two-variable Gegenbauer transform: constant-free ratio identities."""
    checks = []
    nus = [0.0, 1.0] if quick else [0.0, 1.0, 2.5]
    for nu in nus:
        rule = disk_rule(150, 256, nu)
        pairs = [(n, k) for n in range(5) for k in range(n + 1)]
        if quick:
            pairs = [(0, 0), (2, 1), (3, 3)]
        for (n, k) in pairs:
            vals = tr.gegenbauer2d_on_rule(n, k, nu + 0.5, rule)
            phi = 1.1
            rho1, rho2 = 0.9, 1.7
            f1 = _fourier_of_values(rule, vals, (rho1 * math.cos(phi), rho1 * math.sin(phi)))
            f2 = _fourier_of_values(rule, vals, (rho2 * math.cos(phi), rho2 * math.sin(phi)))
            s1 = tr._gegen2d_shape(nu, n, k, rho1, phi)
            s2 = tr._gegen2d_shape(nu, n, k, rho2, phi)
            checks.append(_check(f"thm42 rho-ratio nu={nu} n={n} k={k}",
                                 abs(f1 / f2 - s1 / s2) / abs(f1 / f2), 1e-6))
            rho = 1.3
            p1, p2 = 0.5, 2.2
            g1 = _fourier_of_values(rule, vals, (rho * math.cos(p1), rho * math.sin(p1)))
            g2 = _fourier_of_values(rule, vals, (rho * math.cos(p2), rho * math.sin(p2)))
            t1 = tr._gegen2d_shape(nu, n, k, rho, p1)
            t2 = tr._gegen2d_shape(nu, n, k, rho, p2)
            checks.append(_check(f"thm42 phi-ratio nu={nu} n={n} k={k}",
                                 abs(g1 / g2 - t1 / t2) / abs(g1 / g2), 1e-6))
    return checks


def suite_kernel(quick=False):
    """Iterated-transform kernel: 2D quadrature vs j_{nu+1}(c ||y-z||)."""
    checks = []
    rng = np.random.default_rng(20240817)
    pts = []
    while len(pts) < (4 if quick else 10):
        p = rng.uniform(-1, 1, size=4)
        if p[0] ** 2 + p[1] ** 2 < 1 and p[2] ** 2 + p[3] ** 2 < 1:
            pts.append(p)
    for nu in ([0.0, 1.0] if quick else [0.0, 1.0, 2.5]):
        rule = disk_rule(150, 256, nu)
        for c in (1.0, 3.0):
            worst = 0.0
            for p in pts:
                y, z = p[:2], p[2:]
                q = _fourier_of_values(rule, np.ones_like(rule.xs), (c * (y[0] - z[0]), c * (y[1] - z[1])))
                worst = max(worst, abs(q - ops.kernel_K(nu, c, y, z)))
            checks.append(_check(f"kernel nu={nu} c={c}", worst, 1e-8))
    return checks


def _commute_family(N):
    """Smooth radial test functions t^(N+1/2) (1-t^2) q(t^2) whose boundary
    terms vanish on both ends of the integration-by-parts identity."""
    return [
        lambda t, N=N: t ** (N + 0.5) * (1 - t * t),
        lambda t, N=N: t ** (N + 0.5) * (1 - t * t) * (1 + 0.5 * t * t),
        lambda t, N=N: t ** (N + 0.5) * (1 - t * t) * (1 - t * t + t ** 4),
    ]


def _L_near_boundary(nu, c, N, f, t):
    """apply_L with the stencil shrunk to fit inside (0, 1).

    Quadrature nodes approach both endpoints closer than the default step;
    t/16 keeps the Richardson stencil in-domain and its truncation error on
    the t^(N+1/2)-type radial family below the commutator tolerance.
    """
    return ops.apply_L(nu, c, N, f, t, h=min(1e-4, t / 16, (1 - t) / 16))


def suite_commute(quick=False):
    """Commutation of the Hankel operator with the differential operator."""
    checks = []
    grid = [(0.0, 1.0, 0), (1.0, 1.0, 1), (2.5, 0.5, 3)] if quick else \
        [(nu, c, N) for nu in (0.0, 1.0, 2.5) for c in (0.5, 1.0, 5.0) for N in (0, 1, 3)]
    xs = np.linspace(0.1, 0.9, 9)
    for (nu, c, N) in grid:
        rule = radial_rule(240, nu)
        for jf, f in enumerate(_commute_family(N)):
            h_of_lf = np.array([ops.apply_finite_hankel(
                nu, c, N, lambda t: _L_near_boundary(nu, c, N, f, t), x, rule)
                for x in xs])
            l_of_hf = np.array([ops.apply_L(
                nu, c, N, lambda t: ops.apply_finite_hankel(nu, c, N, f, t, rule), x)
                for x in xs])
            scale = np.max(np.abs(h_of_lf))
            checks.append(_check(
                f"commute nu={nu} c={c} N={N} f{jf}",
                np.max(np.abs(h_of_lf - l_of_hf)) / scale, 1e-5))
    return checks


def suite_nystrom(quick=False):
    """Cross-method agreement: spectral sqrt(c) mu vs the Nystrom oracle."""
    checks = []
    grid = [(0.0, 1.0, 0), (1.0, 0.5, 3)] if quick else \
        [(nu, c, N) for nu in (0.0, 1.0, 2.5) for c in (0.5, 1.0, 5.0) for N in (0, 1, 3)]
    for (nu, c, N) in grid:
        p = sl.SlepianParams(nu=nu, c=c, N=N)
        modes = sl.solve_modes(p, 5)
        oracle = ops.nystrom_hankel_eigs(nu, c, N, 300, 5)
        worst = 0.0
        for m, q in zip(modes, oracle):
            worst = max(worst, abs(math.sqrt(c) * m.mu - q.value) / abs(q.value))
        detail = ""
        if (nu, c, N) == (0.0, 1.0, 0):
            detail = f"top sqrt(c)*mu = {oracle[0].value:.17g}"
        checks.append(_check(f"nystrom nu={nu} c={c} N={N}", worst, 1e-7, detail))
    return checks


def suite_orthogonality(quick=False):
    """Gram matrices: radial phi family and full 2D psi family."""
    checks = []
    grid = [(0.0, 1.0, 0)] if quick else [(0.0, 1.0, 0), (1.0, 2.0, 1), (2.5, 0.5, 2)]
    nmax = 6 if quick else 11
    for (nu, c, N) in grid:
        p = sl.SlepianParams(nu=nu, c=c, N=N)
        modes = sl.solve_modes(p, nmax)
        rule = radial_rule(300, nu)
        vals = np.array([sl.eval_phi(m, p, rule.nodes) for m in modes])
        gram = (vals * rule.weights) @ vals.T
        checks.append(_check(f"radial gram nu={nu} c={c} N={N}",
                             np.max(np.abs(gram - np.eye(nmax))), 1e-9))
    # 2D double orthogonality across angular orders
    nu, c = 1.0, 1.5
    drule = disk_rule(120, 128, nu)
    fam = []
    for N in (0, 1, 2):
        p = sl.SlepianParams(nu=nu, c=c, N=N)
        for m in sl.solve_modes(p, 2):
            fam.append(sl.eval_psi(m, p, drule.rs, drule.angles))
    fam = np.array(fam)
    gram = (fam * drule.weights) @ fam.conj().T
    checks.append(_check("disk gram (N=0..2, n=0..1)",
                         np.max(np.abs(gram - np.eye(len(fam)))), 1e-8))
    return checks


SUITES = {
    "lemma1": suite_lemma1,
    "theorem41": suite_theorem41,
    "theorem42": suite_theorem42,
    "kernel": suite_kernel,
    "commute": suite_commute,
    "nystrom": suite_nystrom,
    "orthogonality": suite_orthogonality,
}


def run_suite(name, quick=False):
    """Run one named suite (or 'all'); returns the list of Check records."""
    if name == "all":
        out = []
        for fn in SUITES.values():
            out.extend(fn(quick=quick))
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from "
                       f"{', '.join(list(SUITES) + ['all'])}")
    return SUITES[name](quick=quick)
