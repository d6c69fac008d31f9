"""Quadrature-backed integral and differential operators on the disk.

Reference implementations of the finite Hankel transform on (0,1), the
commuting second-order differential operator, the weighted finite Fourier
transform on the unit disk and its adjoint, plus the symmetrized Nystrom
discretization that serves as the independent spectral oracle for the
Hankel operator.

Radial and disk functions are plain callables; they should accept ndarray
arguments (every function this package produces does), but scalar-only
callables are detected and looped over.

Accumulation detail: the finite Hankel transform of a high-index
eigenfunction is a near-perfect cancellation of O(1) quadrature terms down
to ~1e-12 of their magnitude, so sums here run in ``numpy.longdouble``;
with plain double the summation noise alone would exceed the residual
tolerances the eigenrelation tests impose.
"""

import numpy as np

from . import _ddarith as dd
from .linalg import EigenPair, dense_sym_eigen
from .quadrature import radial_rule
from .specfun import j_script, j_small, j_script_over_power_array, _SERIES_CUTOFF

__all__ = ["apply_finite_hankel", "apply_L", "apply_L_classical",
           "nystrom_hankel_eigs", "kernel_K", "apply_weighted_fourier",
           "apply_adjoint_fourier"]

_LD = np.longdouble


def _eval_on(f, *arrays):
    """Evaluate callable f on ndarrays, falling back to a scalar loop."""
    try:
        vals = np.asarray(f(*arrays))
        if vals.shape == arrays[0].shape:
            return vals
    except (TypeError, ValueError):
        pass
    return np.array([f(*args) for args in zip(*(a.ravel() for a in arrays))]
                    ).reshape(arrays[0].shape)


def _script_kernel_ld(order, z):
    """script-J of ``order`` on an ndarray of arguments, longdouble output."""
    z = np.asarray(z)
    if z.size and float(np.max(z)) <= _SERIES_CUTOFF:
        return j_script_over_power_array(order, z.astype(_LD), 0.0)
    flat = np.array([j_script(order, float(t)) for t in z.ravel()], dtype=_LD)
    return flat.reshape(z.shape)


def apply_finite_hankel(nu, c, N, f, x, rule):
    """Finite Hankel transform H_{c,N,nu} f(x) by quadrature:

        integral_0^1 scriptJ_N(c x t) f(t) (1-t^2)^nu dt

    ``rule`` must be a radial rule built for the weight (1-t^2)^nu.
    """
    if x <= 0:
        raise ValueError("apply_finite_hankel requires x > 0")
    t = rule.nodes
    kern = _script_kernel_ld(N, _LD(c) * _LD(x) * t.astype(_LD))
    try:
        # extended-precision nodes so smooth integrands enter at better than
        # double rounding; cheap integrands simply promote
        fv = np.asarray(_eval_on(f, t.astype(_LD)), dtype=_LD)
    except (TypeError, ValueError):
        fv = np.asarray(_eval_on(f, t), dtype=_LD)
    return float(np.sum(np.asarray(rule.weights, dtype=_LD) * kern * fv))


def _L_once(nu, c, N, f, x, h):
    fm2, fm1, f0, fp1, fp2 = (f(x - 2 * h), f(x - h), f(x), f(x + h), f(x + 2 * h))
    d1 = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h)
    d2 = (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h * h)
    return ((1 - x * x) * d2 - 2 * (nu + 1) * x * d1
            + ((0.25 - N * N) / (x * x) - c * c * x * x) * f0)


def apply_L(nu, c, N, f, x, h=1e-4):
    """Differential operator L_{c,N,nu} applied to f at x by finite differences.

        L = (1-x^2) d^2/dx^2 - 2(nu+1) x d/dx + (1/4 - N^2)/x^2 - c^2 x^2

    5-point central stencils of width h, Richardson-extrapolated once.
    Note the sign convention: on the zero-bandwidth eigenbasis L T = -chi T
    with chi > 0; the spectral solver works with Lambda = -L throughout.
    """
    if not (2 * h < x < 1 - 2 * h):
        raise ValueError(f"stencil of width {h} out of domain at x={x}")
    coarse = _L_once(nu, c, N, f, x, h)
    fine = _L_once(nu, c, N, f, x, h / 2)
    return (16 * fine - coarse) / 15


def _L_classical_once(c, N, f, x, h):
    fm2, fm1, f0, fp1, fp2 = (f(x - 2 * h), f(x - h), f(x), f(x + h), f(x + 2 * h))
    d1 = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h)
    d2 = (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h * h)
    return (1 - x * x) * d2 - 2 * x * d1 + ((0.25 - N * N) / (x * x) - c * c * x * x) * f0


def apply_L_classical(c, N, f, x, h=1e-4):
    """The classical (unweighted) prolate operator

        (1-t^2) y'' - 2 t y' + ((1/4 - N^2)/t^2 - c^2 t^2) y

    kept as its own code path so the weight-zero reduction of apply_L can be
    regression-tested against it.
    """
    if not (2 * h < x < 1 - 2 * h):
        raise ValueError(f"stencil of width {h} out of domain at x={x}")
    coarse = _L_classical_once(c, N, f, x, h)
    fine = _L_classical_once(c, N, f, x, h / 2)
    return (16 * fine - coarse) / 15


def nystrom_hankel_eigs(nu, c, N, rule_size, count):
    """Spectrum of the finite Hankel operator by symmetrized Nystrom
    discretization; the independent oracle for the spectral method.

    Builds M_ij = sqrt(w_i w_j) scriptJ_N(c x_i x_j) over the (1-t^2)^nu
    Gauss rule and returns the ``count`` eigenpairs of largest magnitude
    (their values approximate sqrt(c) mu_{N,n}).  Eigenvectors are returned
    as node values of the eigenfunction phi, normalized so the quadrature
    inner product sum(w phi^2) is 1.

    The eigenvalue ladder of this operator decays geometrically: the
    smallest of the requested eigenvalues can sit 15+ orders of magnitude
    below the matrix norm, where even extended-precision entry rounding
    would dominate (Weyl).  The matrix is therefore assembled in compensated
    double-double arithmetic (~1e-32 relative entries) and the LAPACK
    eigenpairs are polished by deflated power iteration with double-double
    matvecs; the geometric decay makes each pair converge in a few steps.
    """
    if rule_size < 4 * count:
        raise ValueError("rule_size must be at least 4*count")
    rule = radial_rule(rule_size, nu)
    n = len(rule.nodes)
    iu = np.triu_indices(n)
    zh, zl = dd.from_prod(rule.nodes[iu[0]], rule.nodes[iu[1]])
    zh, zl = dd.mul_d((zh, zl), float(c))
    kh, kl = dd.script_j_int_order(N, zh, zl)
    swh, swl = dd.sqrt(dd.from_prod(rule.weights[iu[0]], rule.weights[iu[1]]))
    eh, el = dd.mul((kh, kl), (swh, swl))
    Mh = np.zeros((n, n))
    Ml = np.zeros((n, n))
    Mh[iu], Ml[iu] = eh, el
    Mh[(iu[1], iu[0])], Ml[(iu[1], iu[0])] = eh, el
    pairs = dense_sym_eigen(Mh, count)
    out = []
    done = []  # refined dd vectors, largest |lambda| first
    for p in pairs:
        v = (p.vector.copy(), np.zeros(n))
        lam = (p.value, 0.0)
        for _ in range(5):
            uh, ul = dd.matvec(Mh, Ml, v[0], v[1])
            for q in done:
                proj = dd.dot(q[0], q[1], uh, ul)
                corr = dd.mul((q[0], q[1]), proj)
                uh, ul = dd.add((uh, ul), dd.neg(corr))
            nrm = dd.sqrt(dd.dot(uh, ul, uh, ul))
            if not np.isfinite(nrm[0]) or nrm[0] == 0:
                break
            inv = dd.div((1.0, 0.0), nrm)
            uh, ul = dd.mul((uh, ul), inv)
            if np.dot(uh, v[0]) < 0:
                uh, ul = -uh, -ul
            v = (uh, ul)
            mh, ml = dd.matvec(Mh, Ml, uh, ul)
            new_lam = dd.dot(uh, ul, mh, ml)
            if abs(dd.to_float(new_lam) - dd.to_float(lam)) <= 1e-28 * abs(dd.to_float(new_lam)):
                lam = new_lam
                break
            lam = new_lam
        done.append(v)
        phi = v[0] / np.sqrt(rule.weights)
        out.append(EigenPair(dd.to_float(lam), phi))
    return out


def kernel_K(nu, c, y, z):
    """Iterated-transform kernel j_{nu+1}(c * ||y - z||) between disk points."""
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    dist = float(np.hypot(y[0] - z[0], y[1] - z[1]))
    return j_small(nu + 1, c * dist)


def apply_weighted_fourier(nu, c, f, y, rule):
    """Weighted finite Fourier transform on the disk:

        F_{nu,c} f(y) = integral_D e^{i c <x, y>} f(x) w_nu(x) dx

    evaluated with a polar tensor rule (``rule`` from disk_rule(.., nu)).
    """
    y = np.asarray(y, dtype=float)
    phase = np.exp(1j * c * (rule.xs * y[0] + rule.ys * y[1]))
    vals = _eval_on(f, rule.xs, rule.ys)
    acc = np.sum((rule.weights * phase * vals).astype(np.clongdouble))
    return complex(acc)


def apply_adjoint_fourier(nu, c, f, y, rule):
    """Adjoint transform: conjugated kernel e^{-i c <x, y>}."""
    y = np.asarray(y, dtype=float)
    phase = np.exp(-1j * c * (rule.xs * y[0] + rule.ys * y[1]))
    vals = _eval_on(f, rule.xs, rule.ys)
    acc = np.sum((rule.weights * phase * vals).astype(np.clongdouble))
    return complex(acc)
