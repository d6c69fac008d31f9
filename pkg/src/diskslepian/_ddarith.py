"""Minimal vectorized double-double (compensated) arithmetic.

A dd number is an unevaluated sum hi + lo of two float64 values with
|lo| <= ulp(hi)/2, giving ~31 significant digits.  Values are carried as
(hi, lo) pairs of ndarrays (or python floats); all operations broadcast.

Used only by the Nystrom spectral oracle: its matrix norm sits up to 16
orders of magnitude above the smallest eigenvalues under comparison, so
entry rounding at double or even extended precision would dominate those
eigenvalues (Weyl: |dlambda| <= ||dM||).  Classic error-free transformations
(Knuth two_sum, Dekker two_prod / Veltkamp split) push the entry noise to
~1e-32 relative, far below every tolerance in play.
"""

import numpy as np

_SPLIT = 134217729.0  # 2**27 + 1, Veltkamp splitting constant


def two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a, b):
    """two_sum when |a| >= |b| is guaranteed."""
    s = a + b
    err = b - (s - a)
    return s, err


def _split(a):
    c = _SPLIT * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def add(x, y):
    xh, xl = x
    yh, yl = y
    s, e = two_sum(xh, yh)
    e = e + (xl + yl)
    return quick_two_sum(s, e)


def neg(x):
    return -x[0], -x[1]


def mul(x, y):
    xh, xl = x
    yh, yl = y
    p, e = two_prod(xh, yh)
    e = e + (xh * yl + xl * yh)
    return quick_two_sum(p, e)


def mul_d(x, c):
    """dd times exact double."""
    xh, xl = x
    p, e = two_prod(xh, c)
    e = e + xl * c
    return quick_two_sum(p, e)


def div(x, y):
    xh, xl = x
    yh, yl = y
    q1 = xh / yh
    r = add(x, neg(mul(y, (q1, np.zeros_like(q1) if isinstance(q1, np.ndarray) else 0.0))))
    q2 = (r[0] + r[1]) / yh
    return quick_two_sum(q1, q2)


def sqrt(x):
    """dd square root (one Newton correction from the double root)."""
    xh, xl = x
    y = np.sqrt(xh)
    p, e = two_prod(y, y)
    r = add(x, (-p, -e))
    safe = np.where(y > 0, y, 1.0) if isinstance(y, np.ndarray) else (y if y > 0 else 1.0)
    corr = (r[0] + r[1]) / (2.0 * safe)
    corr = np.where(y > 0, corr, 0.0) if isinstance(y, np.ndarray) else (corr if y > 0 else 0.0)
    return quick_two_sum(y, corr)


def from_prod(a, b):
    """Exact dd product of two float64 arrays/scalars."""
    return two_prod(a, b)


def to_float(x):
    return x[0] + x[1]


def dd_sum(xh, xl, axis):
    """Sum a dd array along ``axis`` with a dd accumulation cascade."""
    xh = np.moveaxis(xh, axis, 0)
    xl = np.moveaxis(xl, axis, 0)
    acc = (xh[0].copy(), xl[0].copy())
    for i in range(1, xh.shape[0]):
        acc = add(acc, (xh[i], xl[i]))
    return acc


def matvec(mh, ml, vh, vl):
    """dd matrix @ dd vector -> dd vector."""
    ph, pe = two_prod(mh, vh[None, :])
    pe = pe + (mh * vl[None, :] + ml * vh[None, :])
    return dd_sum(ph, pe, axis=1)


def dot(uh, ul, vh, vl):
    ph, pe = two_prod(uh, vh)
    pe = pe + (uh * vl + ul * vh)
    return dd_sum(ph, pe, axis=0)


def jsmall_series(order, zh, zl, max_terms=300):
    """dd evaluation of the normalized small-Bessel series

        sum_k (-1)^k (z^2/4)^k / (k! (order+1)_k)

    on dd array argument z (|z| small enough that the alternating series has
    no deep cancellation, i.e. |z| <= ~12).
    """
    q = mul((zh, zl), (zh, zl))
    q = mul_d(q, 0.25)
    term = (np.ones_like(zh), np.zeros_like(zh))
    total = term
    for k in range(1, max_terms):
        den = mul_d(two_sum(float(order), float(k)), float(k))  # k * (order + k), dd
        factor = div(neg(q), den)
        term = mul(term, factor)
        total = add(total, term)
        if np.max(np.abs(term[0])) <= 1e-35 * max(np.max(np.abs(total[0])), 1e-300):
            break
    return total


def script_j_int_order(N, zh, zl):
    """dd script-J of integer order: sqrt(z) J_N(z) = z^(N+1/2) jsmall / (2^N N!)."""
    small = jsmall_series(N, zh, zl)
    zp = sqrt((zh, zl))
    cur = (zh, zl)
    n = N
    while n > 0:  # z^N by repeated multiplication; N is small (angular order)
        if n & 1:
            zp = mul(zp, cur)
        cur = mul(cur, cur)
        n >>= 1
    out = mul(small, zp)
    scale = 1.0
    for i in range(1, N + 1):
        scale *= 2.0 * i  # 2^N N!, exact in double for any sane angular order
    if scale != 1.0:
        out = div(out, (scale, 0.0))
    return out
