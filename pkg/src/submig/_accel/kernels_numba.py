"""Numba-compiled kernel implementations.

Scalar cores njit-compiled per element, array drivers parallelized with
prange.  fastmath stays off so results track the NumPy backend to a couple
of ulp and runs are reproducible regardless of thread count (each grid
point owns its output slot; no shared reductions).
"""

import numpy as np
from numba import njit, prange

from .coeffs import (
    ASYM_A0,
    ASYM_A1,
    EULER_GAMMA,
    HARMONIC,
    SERIES_CROSSOVER,
    SERIES_TERMS,
)

TWO_OVER_PI = 2.0 / np.pi
_N_ASYM_PAIRS = len(ASYM_A0) // 2

# Dekker splitting constant, 2^27 + 1
_SPLITTER = 134217729.0

# J series in double-double (hi, lo) arithmetic; see kernels_numpy for the
# cancellation rationale.  Same arithmetic sequence, scalar form.


@njit(cache=True)
def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


@njit(cache=True)
def _quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


@njit(cache=True)
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


@njit(cache=True)
def _dd_mul_d(hi, lo, c):
    p, e = _two_prod(hi, c)
    return _quick_two_sum(p, e + lo * c)


@njit(cache=True)
def _dd_div_d(hi, lo, d):
    q1 = hi / d
    p, e = _two_prod(q1, d)
    q2 = (((hi - p) - e) + lo) / d
    return _quick_two_sum(q1, q2)


@njit(cache=True)
def _dd_add_dd(ahi, alo, bhi, blo):
    s, e = _two_sum(ahi, bhi)
    return _quick_two_sum(s, e + (alo + blo))


@njit(cache=True)
def _series_j0(x):
    q = x * x * 0.25
    t_hi = 1.0
    t_lo = 0.0
    s_hi = 1.0
    s_lo = 0.0
    for k in range(1, SERIES_TERMS + 1):
        t_hi, t_lo = _dd_mul_d(t_hi, t_lo, q)
        t_hi, t_lo = _dd_div_d(-t_hi, -t_lo, float(k * k))
        s_hi, s_lo = _dd_add_dd(s_hi, s_lo, t_hi, t_lo)
    return s_hi + s_lo


@njit(cache=True)
def _series_j1(x):
    q = x * x * 0.25
    t_hi = 0.5 * x
    t_lo = 0.0
    s_hi = t_hi
    s_lo = 0.0
    for k in range(1, SERIES_TERMS + 1):
        t_hi, t_lo = _dd_mul_d(t_hi, t_lo, q)
        t_hi, t_lo = _dd_div_d(-t_hi, -t_lo, float(k * (k + 1)))
        s_hi, s_lo = _dd_add_dd(s_hi, s_lo, t_hi, t_lo)
    return s_hi + s_lo


@njit(cache=True)
def _series_y0(x):
    q = x * x * 0.25
    term = 1.0
    s = 0.0
    comp = 0.0
    for k in range(1, SERIES_TERMS + 1):
        term = -term * q / (k * k)
        y = -term * HARMONIC[k - 1] - comp
        t = s + y
        comp = (t - s) - y
        s = t
    return TWO_OVER_PI * ((np.log(0.5 * x) + EULER_GAMMA) * _series_j0(x) + s)


@njit(cache=True)
def _series_y1(x):
    q = x * x * 0.25
    term = 1.0
    s = 1.0 - 2.0 * EULER_GAMMA
    comp = 0.0
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


@njit(cache=True)
def _asym_jy(x, nu, a):
    x2 = x * x
    p = 0.0
    q = 0.0
    xp = 1.0
    sgn = 1.0
    for k in range(_N_ASYM_PAIRS):
        p = p + sgn * a[2 * k] / xp
        q = q + sgn * a[2 * k + 1] / (xp * x)
        xp = xp * x2
        sgn = -sgn
    w = x - (0.5 * nu + 0.25) * np.pi
    amp = np.sqrt(2.0 / (np.pi * x))
    cw = np.cos(w)
    sw = np.sin(w)
    return amp * (p * cw - q * sw), amp * (p * sw + q * cw)


@njit(cache=True, parallel=True)
def j0_array(x):
    out = np.empty_like(x)
    for i in prange(x.shape[0]):
        if x[i] < SERIES_CROSSOVER:
            out[i] = _series_j0(x[i])
        else:
            out[i] = _asym_jy(x[i], 0, ASYM_A0)[0]
    return out


@njit(cache=True, parallel=True)
def j1_array(x):
    out = np.empty_like(x)
    for i in prange(x.shape[0]):
        if x[i] < SERIES_CROSSOVER:
            out[i] = _series_j1(x[i])
        else:
            out[i] = _asym_jy(x[i], 1, ASYM_A1)[0]
    return out


@njit(cache=True, parallel=True)
def y0_array(x):
    out = np.empty_like(x)
    for i in prange(x.shape[0]):
        if x[i] < SERIES_CROSSOVER:
            out[i] = _series_y0(x[i])
        else:
            out[i] = _asym_jy(x[i], 0, ASYM_A0)[1]
    return out


@njit(cache=True, parallel=True)
def y1_array(x):
    out = np.empty_like(x)
    for i in prange(x.shape[0]):
        if x[i] < SERIES_CROSSOVER:
            out[i] = _series_y1(x[i])
        else:
            out[i] = _asym_jy(x[i], 1, ASYM_A1)[1]
    return out


@njit(cache=True, parallel=True)
def map_contribution(points, dirs, coef_conj, omega, u_sel, v_sel_conj):
    n_pts = points.shape[0]
    n_dirs = dirs.shape[0]
    n_sel = u_sel.shape[1]
    out = np.empty(n_pts, dtype=np.complex128)
    for g in prange(n_pts):
        acc_u = np.zeros(n_sel, dtype=np.complex128)
        acc_v = np.zeros(n_sel, dtype=np.complex128)
        for p in range(n_dirs):
            phase = -omega * (points[g, 0] * dirs[p, 0] + points[g, 1] * dirs[p, 1])
            z = coef_conj[p] * (np.cos(phase) + 1j * np.sin(phase))
            for m in range(n_sel):
                acc_u[m] += z * u_sel[p, m]
                acc_v[m] += z * v_sel_conj[p, m]
        total = 0.0 + 0.0j
        for m in range(n_sel):
            total += acc_u[m] * acc_v[m]
        out[g] = total
    return out
