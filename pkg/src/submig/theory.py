"""Analytic structure of the imaging maps, and map-to-map comparison.

For well-separated small scatterers and a dense direction set, the
single-frequency map behaves like sum_m J0^2(omega |r_m - r|) and the
multi-frequency map like the band average of that expression, which
integrates in closed form to the J0^2 + J1^2 combination evaluated at the
band edges plus a residual J1^2 band integral.  This module evaluates those
envelopes on a grid, quantifies how well a computed map matches them (one
fitted scale, normalized RMS, Pearson correlation, per-scatterer peak
offsets), and provides the quadrature checks for the identities involved.
"""

import json
import warnings
from dataclasses import dataclass, asdict
from typing import NamedTuple

import numpy as np

from .exceptions import DomainError, UsageError
from .migration import HeatMap
from .scene import Scene, SearchGrid, unit_directions
from .specfun import bessel_j0, bessel_j1

__all__ = [
    "ComparisonReport",
    "PeakComparison",
    "PeakResult",
    "CircleQuadrature",
    "predicted_single_map",
    "predicted_multi_map",
    "j1_squared_integral",
    "circle_integral_check",
    "compare_maps",
    "extract_peaks",
    "adaptive_simpson",
]


def _distances(grid: SearchGrid, location) -> np.ndarray:
    pts = grid.points()
    return np.hypot(pts[:, 0] - location[0], pts[:, 1] - location[1])


def predicted_single_map(grid: SearchGrid, scene: Scene, omega: float) -> HeatMap:
    """Envelope of the single-frequency map: sum_m J0^2(omega |r_m - r|)."""
    if omega <= 0:
        raise DomainError(f"predicted_single_map requires omega > 0, got {omega}")
    total = np.zeros(grid.nx * grid.ny)
    for loc in scene.locations():
        total += bessel_j0(omega * _distances(grid, loc)) ** 2
    return HeatMap(grid=grid, values=total.reshape(grid.shape()), label="theory-single")


def predicted_multi_map(grid: SearchGrid, scene: Scene,
                        omega_lo: float, omega_hi: float) -> HeatMap:
    """Envelope of the multi-frequency map.

    | sum_m [ w_hi (J0^2 + J1^2)(w_hi d_m) - w_lo (J0^2 + J1^2)(w_lo d_m) ]
      / (w_hi - w_lo) |  with d_m = |r_m - r|.
    """
    if not (omega_hi > omega_lo > 0):
        raise DomainError(
            f"predicted_multi_map requires omega_hi > omega_lo > 0, "
            f"got ({omega_lo}, {omega_hi}); use predicted_single_map for a single frequency")
    acc = np.zeros(grid.nx * grid.ny)
    span = omega_hi - omega_lo
    for loc in scene.locations():
        d = _distances(grid, loc)
        hi = bessel_j0(omega_hi * d) ** 2 + bessel_j1(omega_hi * d) ** 2
        lo = bessel_j0(omega_lo * d) ** 2 + bessel_j1(omega_lo * d) ** 2
        acc += (omega_hi * hi - omega_lo * lo) / span
    return HeatMap(grid=grid, values=np.abs(acc).reshape(grid.shape()), label="theory-multi")


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-10,
                     max_depth: int = 50) -> float:
    """Adaptive Simpson quadrature with absolute tolerance."""

    def _simpson(lo, flo, hi, fhi, fmid):
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    def _recurse(lo, flo, hi, fhi, fmid, whole, eps, depth):
        mid = 0.5 * (lo + hi)
        lmid = 0.5 * (lo + mid)
        rmid = 0.5 * (mid + hi)
        flmid = f(lmid)
        frmid = f(rmid)
        left = _simpson(lo, flo, mid, fmid, flmid)
        right = _simpson(mid, fmid, hi, fhi, frmid)
        if depth >= max_depth or abs(left + right - whole) <= 15.0 * eps:
            return left + right + (left + right - whole) / 15.0
        half = 0.5 * eps
        return (_recurse(lo, flo, mid, fmid, flmid, left, half, depth + 1)
                + _recurse(mid, fmid, hi, fhi, frmid, right, half, depth + 1))

    fa, fb = f(a), f(b)
    fm = f(0.5 * (a + b))
    whole = _simpson(a, fa, b, fb, fm)
    return _recurse(a, fa, b, fb, fm, whole, tol, 0)


def j1_squared_integral(distance: float, omega_lo: float, omega_hi: float) -> float:
    """Band integral of J1^2(omega * distance) d omega, absolute error <= 1e-9.

    This is the residual term that separates the discrete multi-frequency
    average from its closed-form band envelope; for omega_hi * distance well
    below sqrt(2) it stays under omega_hi / 4.
    """
    if not (omega_hi > omega_lo > 0):
        raise DomainError("j1_squared_integral requires omega_hi > omega_lo > 0")
    if distance < 0:
        raise DomainError("distance must be nonnegative")
    if distance == 0.0:
        return 0.0
    return adaptive_simpson(
        lambda w: bessel_j1(w * distance) ** 2, omega_lo, omega_hi, tol=1e-10)


class CircleQuadrature(NamedTuple):
    quadrature: complex
    reference: float
    error: float


def circle_integral_check(r, omega: float, n: int) -> CircleQuadrature:
    """Equispaced quadrature of the circle integral of exp(j omega d.r).

    Compares (2 pi / n) sum_p exp(j omega d_p . r) with its closed form
    2 pi J0(omega |r|); the gap shrinks spectrally in n until roundoff.
    """
    dirs = unit_directions(n)
    rvec = np.asarray(r, dtype=float)
    quad = (2.0 * np.pi / n) * complex(np.sum(np.exp(1j * omega * (dirs @ rvec))))
    ref = 2.0 * np.pi * bessel_j0(omega * float(np.hypot(rvec[0], rvec[1])))
    return CircleQuadrature(quadrature=quad, reference=ref, error=abs(quad - ref))


@dataclass
class PeakComparison:
    true_location: tuple
    predicted_peak: tuple
    computed_peak: tuple
    predicted_distance: float
    computed_distance: float


@dataclass
class ComparisonReport:
    """Scale-invariant agreement between a computed and a predicted map."""

    scale: float
    nrmse: float
    correlation: float
    peaks: list

    def to_json(self) -> str:
        return json.dumps(
            {
                "scale": self.scale,
                "nrmse": self.nrmse,
                "correlation": self.correlation,
                "peaks": [asdict(p) for p in self.peaks],
            },
            indent=2,
        )


def compare_maps(computed: HeatMap, predicted: HeatMap,
                 true_locations=()) -> ComparisonReport:
    """Fit computed ~ C * predicted and report the residual statistics.

    The single least-squares scale C reflects that the envelopes hold up to
    an unspecified constant.  When true scatterer locations are supplied,
    each one is matched with the nearest local maximum of both maps.
    """
    if computed.grid != predicted.grid:
        raise UsageError("compare_maps requires identical grids")
    a = computed.values.ravel()
    b = predicted.values.ravel()
    denom = float(b @ b)
    if denom == 0.0:
        raise DomainError("predicted map is identically zero")
    scale = float(a @ b) / denom
    resid = a - scale * b
    norm_a = float(np.linalg.norm(a))
    if norm_a == 0.0:
        raise DomainError("computed map is identically zero")
    nrmse = float(np.linalg.norm(resid)) / norm_a
    if np.std(a) == 0.0 or np.std(b) == 0.0:
        raise DomainError("correlation undefined for a constant map")
    correlation = float(np.corrcoef(a, b)[0, 1])

    peaks = []
    if len(true_locations):
        comp_peaks = _local_maxima(computed)
        pred_peaks = _local_maxima(predicted)
        for loc in true_locations:
            loc = (float(loc[0]), float(loc[1]))
            cp = _nearest(comp_peaks, loc)
            pp = _nearest(pred_peaks, loc)
            peaks.append(PeakComparison(
                true_location=loc,
                predicted_peak=pp,
                computed_peak=cp,
                predicted_distance=float(np.hypot(pp[0] - loc[0], pp[1] - loc[1])),
                computed_distance=float(np.hypot(cp[0] - loc[0], cp[1] - loc[1])),
            ))
    return ComparisonReport(scale=scale, nrmse=nrmse, correlation=correlation, peaks=peaks)


def _local_maxima(heatmap: HeatMap):
    """Grid locations of strict 8-neighbor local maxima with their values."""
    v = heatmap.values
    padded = np.pad(v, 1, constant_values=-np.inf)
    ny, nx = v.shape
    best = np.full_like(v, -np.inf)
    for dy in (-1, 0, 1):
        for dx in (-1, 0, 1):
            if dy == 0 and dx == 0:
                continue
            np.maximum(best, padded[1 + dy:1 + dy + ny, 1 + dx:1 + dx + nx], out=best)
    mask = v > best
    iy, ix = np.nonzero(mask)
    xs = heatmap.grid.xs()
    ys = heatmap.grid.ys()
    return [((float(xs[x]), float(ys[y])), float(v[y, x])) for y, x in zip(iy, ix)]


def _nearest(candidates, loc):
    if not candidates:
        return (np.nan, np.nan)
    pts = np.array([c[0] for c in candidates])
    i = int(np.argmin(np.hypot(pts[:, 0] - loc[0], pts[:, 1] - loc[1])))
    return candidates[i][0]


class PeakResult(NamedTuple):
    points: list
    values: list
    complete: bool


def extract_peaks(heatmap: HeatMap, count: int, min_separation: float) -> PeakResult:
    """Greedy selection of the `count` largest well-separated local maxima.

    Candidates are strict 8-neighbor local maxima, taken in descending value
    and skipped when closer than min_separation to an already chosen peak.
    Returns fewer points (complete=False, with a warning) when the map does
    not contain enough separated maxima.
    """
    if count < 1:
        raise UsageError(f"peak count must be >= 1, got {count}")
    if min_separation <= 0:
        raise UsageError(f"min_separation must be positive, got {min_separation}")
    candidates = sorted(_local_maxima(heatmap), key=lambda c: -c[1])
    points, values = [], []
    for (x, y), val in candidates:
        if any(np.hypot(x - px, y - py) < min_separation for px, py in points):
            continue
        points.append((x, y))
        values.append(val)
        if len(points) == count:
            break
    complete = len(points) == count
    if not complete:
        warnings.warn(
            f"requested {count} peaks but found {len(points)} separated local maxima",
            stacklevel=2)
    return PeakResult(points=points, values=values, complete=complete)
