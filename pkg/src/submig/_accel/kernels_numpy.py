"""Pure-NumPy kernel implementations.

Masked two-branch evaluation; every element sees the same arithmetic
sequence as the numba backend (fixed-order loops, compensated summation),
so the backends agree to within a couple of ulp.
"""

import numpy as np

from .coeffs import (
    ASYM_A0,
    ASYM_A1,
    EULER_GAMMA,
    HARMONIC,
    SERIES_CROSSOVER,
    SERIES_TERMS,
)

TWO_OVER_PI = 2.0 / np.pi

# Dekker splitting constant, 2^27 + 1
_SPLITTER = 134217729.0

# The J series run in double-double (hi, lo) arithmetic: the alternating
# terms reach ~e^x/(pi x) while the sum stays O(1), so a plain float64
# accumulation leaves ~1e-12 of cancellation noise near the crossover,
# too much for finite-difference identities downstream.


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _two_prod(a, b):
    p = a * b
    t = _SPLITTER * a
    ahi = t - (t - a)
    alo = a - ahi
    t = _SPLITTER * b
    bhi = t - (t - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def _dd_mul_d(hi, lo, c):
    p, e = _two_prod(hi, c)
    return _quick_two_sum(p, e + lo * c)


def _dd_div_d(hi, lo, d):
    q1 = hi / d
    p, e = _two_prod(q1, d)
    q2 = (((hi - p) - e) + lo) / d
    return _quick_two_sum(q1, q2)


def _dd_add_dd(ahi, alo, bhi, blo):
    s, e = _two_sum(ahi, bhi)
    return _quick_two_sum(s, e + (alo + blo))


def _series_j0(x):
    q = x * x * 0.25
    t_hi = np.ones_like(x)
    t_lo = np.zeros_like(x)
    s_hi = np.ones_like(x)
    s_lo = np.zeros_like(x)
    for k in range(1, SERIES_TERMS + 1):
        t_hi, t_lo = _dd_mul_d(t_hi, t_lo, q)
        t_hi, t_lo = _dd_div_d(-t_hi, -t_lo, float(k * k))
        s_hi, s_lo = _dd_add_dd(s_hi, s_lo, t_hi, t_lo)
    return s_hi + s_lo


def _series_j1(x):
    q = x * x * 0.25
    t_hi = 0.5 * x
    t_lo = np.zeros_like(x)
    s_hi = t_hi.copy()
    s_lo = np.zeros_like(x)
    for k in range(1, SERIES_TERMS + 1):
        t_hi, t_lo = _dd_mul_d(t_hi, t_lo, q)
        t_hi, t_lo = _dd_div_d(-t_hi, -t_lo, float(k * (k + 1)))
        s_hi, s_lo = _dd_add_dd(s_hi, s_lo, t_hi, t_lo)
    return s_hi + s_lo


def _series_y0(x):
    # (2/pi) [(ln(x/2) + gamma) J0(x) + sum_{k>=1} (-1)^{k+1} H_k (x^2/4)^k / (k!)^2]
    q = x * x * 0.25
    term = np.ones_like(x)
    s = np.zeros_like(x)
    comp = np.zeros_like(x)
    for k in range(1, SERIES_TERMS + 1):
        term = -term * q / (k * k)
        y = -term * HARMONIC[k - 1] - comp
        t = s + y
        comp = (t - s) - y
        s = t
    return TWO_OVER_PI * ((np.log(0.5 * x) + EULER_GAMMA) * _series_j0(x) + s)


def _series_y1(x):
    # (2/pi) ln(x/2) J1(x) - 2/(pi x)
    #   - (x/(2 pi)) sum_{k>=0} (psi(k+1) + psi(k+2)) (-x^2/4)^k / (k! (k+1)!)
    # with psi(k+1) = -gamma + H_k.
    q = x * x * 0.25
    term = np.ones_like(x)
    s = np.full_like(x, 1.0 - 2.0 * EULER_GAMMA)
    comp = np.zeros_like(x)
    for k in range(1, SERIES_TERMS + 1):
        term = -term * q / (k * (k + 1))
        psi2 = -2.0 * EULER_GAMMA + HARMONIC[k - 1] + HARMONIC[k]
        y = term * psi2 - comp
        t = s + y
        comp = (t - s) - y
        s = t
    return (
        TWO_OVER_PI * np.log(0.5 * x) * _series_j1(x)
        - TWO_OVER_PI / x
        - x / (2.0 * np.pi) * s
    )


def _asym_pq(x, a):
    x2 = x * x
    p = np.zeros_like(x)
    q = np.zeros_like(x)
    xp = np.ones_like(x)
    sgn = 1.0
    for k in range(len(a) // 2):
        p = p + sgn * a[2 * k] / xp
        q = q + sgn * a[2 * k + 1] / (xp * x)
        xp = xp * x2
        sgn = -sgn
    return p, q


def _asym_jy(x, nu, a):
    p, q = _asym_pq(x, a)
    w = x - (0.5 * nu + 0.25) * np.pi
    amp = np.sqrt(2.0 / (np.pi * x))
    cw = np.cos(w)
    sw = np.sin(w)
    return amp * (p * cw - q * sw), amp * (p * sw + q * cw)


def _piecewise(x, series_fn, nu, a, want_y):
    out = np.empty_like(x)
    lo = x < SERIES_CROSSOVER
    if np.any(lo):
        out[lo] = series_fn(x[lo])
    hi = ~lo
    if np.any(hi):
        j, y = _asym_jy(x[hi], nu, a)
        out[hi] = y if want_y else j
    return out


def j0_array(x):
    return _piecewise(x, _series_j0, 0, ASYM_A0, False)


def j1_array(x):
    return _piecewise(x, _series_j1, 1, ASYM_A1, False)


def y0_array(x):
    return _piecewise(x, _series_y0, 0, ASYM_A0, True)


def y1_array(x):
    return _piecewise(x, _series_y1, 1, ASYM_A1, True)


def map_contribution(points, dirs, coef_conj, omega, u_sel, v_sel_conj):
    """Unnormalized imaging-functional contribution at one frequency.

    Returns, for each grid point r, sum_m (z.U_m)(z.conj(V_m)) with
    z_p = conj(coef_p) exp(-j omega d_p.r).
    """
    z = coef_conj[np.newaxis, :] * np.exp(-1j * omega * (points @ dirs.T))
    return ((z @ u_sel) * (z @ v_sel_conj)).sum(axis=1)
