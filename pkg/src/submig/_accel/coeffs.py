"""Shared numerical constants for the Bessel kernels.

Both backends evaluate identical formulas with identical truncation orders:
power series below SERIES_CROSSOVER, large-argument Hankel (phase/amplitude)
expansion above it.  The crossover sits where the two branches agree to
better than 1e-11 in double precision.
"""

import numpy as np

EULER_GAMMA = 0.5772156649015328606

# Piecewise evaluation: series on [0, 12), asymptotic on [12, inf).
SERIES_CROSSOVER = 12.0

# Series truncation: terms k=1..SERIES_TERMS beyond the leading one.  At
# x=12 the omitted tail is below 1e-30.
SERIES_TERMS = 40

# Hankel-expansion coefficients a_k(nu), k=0..ASYM_TERMS-1, with
# a_{k+1} = a_k (4 nu^2 - (2k+1)^2) / (8 (k+1)).  Truncating near k=25 is
# the optimal order at x=12 (first omitted term ~6e-12).
ASYM_TERMS = 26


def _hankel_expansion_coeffs(nu: int) -> np.ndarray:
    a = np.empty(ASYM_TERMS)
    a[0] = 1.0
    mu = 4.0 * nu * nu
    for k in range(ASYM_TERMS - 1):
        a[k + 1] = a[k] * (mu - (2 * k + 1) ** 2) / (8.0 * (k + 1))
    return a


ASYM_A0 = _hankel_expansion_coeffs(0)
ASYM_A1 = _hankel_expansion_coeffs(1)

# Harmonic numbers H_1..H_{SERIES_TERMS+1}, used by the Y-series.
HARMONIC = np.cumsum(1.0 / np.arange(1, SERIES_TERMS + 2))
