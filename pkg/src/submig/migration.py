"""Imaging core: SVD of the response matrix and subspace-migration maps.

The map value at a search point r is

    | sum_m  (conj(W(r)) . U_m) (conj(W(r)) . conj(V_m)) |

summed over the retained singular pairs; W is the unit steering vector.
Both dot products are plain (non-conjugating) over the conjugated steering
vector, i.e. the standard Hermitian pairing <U_m, W>.  Conjugating twice
instead silently destroys peak formation, hence the explicit helpers below.
The multi-frequency map averages the complex per-frequency sums before
taking the modulus.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _accel
from .exceptions import ConfigurationError, DomainError, UsageError
from .scene import SearchGrid

__all__ = [
    "SvdBasis",
    "HeatMap",
    "svd_decompose",
    "significant_count",
    "steering_vector",
    "image_single",
    "image_multi",
    "write_heatmap_csv",
    "read_heatmap_csv",
    "write_heatmap_pgm",
]


@dataclass
class SvdBasis:
    """Full SVD of one MSR matrix: entries == U diag(s) conj(V)^T.

    Columns of `left` and `right` are the singular vectors; `significant`
    is the retained count, unset until a threshold rule runs.
    """

    singular_values: np.ndarray
    left: np.ndarray
    right: np.ndarray
    omega: float
    significant: Optional[int] = None


@dataclass
class HeatMap:
    """Scalar field sampled on a SearchGrid; values[iy, ix] >= 0."""

    grid: SearchGrid
    values: np.ndarray
    label: str = ""


def svd_decompose(msr) -> SvdBasis:
    """Full SVD with a deterministic per-pair phase convention.

    Each pair (U_m, V_m) is rotated by a common unit phase making the
    largest-magnitude entry of U_m real positive.  The rotation cancels in
    the imaging product and in the reconstruction, but stabilizes the basis
    for regression tests.
    """
    entries = msr.entries
    if not np.all(np.isfinite(entries)):
        raise DomainError("cannot decompose a matrix with non-finite entries")
    u, s, vh = np.linalg.svd(entries)
    v = vh.conj().T
    for m in range(u.shape[1]):
        anchor = u[np.argmax(np.abs(u[:, m])), m]
        if anchor != 0:
            rot = np.conj(anchor) / abs(anchor)
            u[:, m] *= rot
            v[:, m] *= rot
    return SvdBasis(singular_values=s, left=u, right=v, omega=msr.omega)


def significant_count(basis: SvdBasis, tau: float) -> int:
    """Count singular values with sigma_m / sigma_1 >= tau; stored on the basis."""
    if not (0.0 < tau < 1.0):
        raise ConfigurationError(f"threshold must lie in (0, 1), got {tau}")
    s = basis.singular_values
    if s[0] <= 0.0:
        raise DomainError("all singular values vanish; no signal subspace")
    basis.significant = int(np.sum(s / s[0] >= tau))
    return basis.significant


def _direction_weights(directions: np.ndarray, test_vector) -> np.ndarray:
    c = np.asarray(test_vector, dtype=np.complex128)
    if c.shape != (3,) or not np.any(c):
        raise ConfigurationError("test vector must be a nonzero 3-component vector")
    weights = c[0] + directions @ c[1:]
    if np.allclose(weights, 0.0, atol=1e-300):
        raise DomainError("degenerate test vector: c . (1, d_p) vanishes for every direction")
    return weights


def steering_vector(r, omega: float, directions: np.ndarray, test_vector) -> np.ndarray:
    """Unit steering vector with entries c.(1,d_p)^T exp(j omega d_p . r)."""
    weights = _direction_weights(directions, test_vector)
    raw = weights * np.exp(1j * omega * (directions @ np.asarray(r, dtype=float)))
    return raw / np.linalg.norm(raw)


def _frequency_sum(grid: SearchGrid, basis: SvdBasis, directions, test_vector) -> np.ndarray:
    """Complex per-point sum over the retained singular pairs at one frequency."""
    if basis.significant is None:
        raise UsageError("basis is untruncated: run significant_count first")
    if basis.significant < 1:
        raise UsageError("basis retains no singular pairs")
    weights = _direction_weights(directions, test_vector)
    norm_sq = float(np.sum(np.abs(weights) ** 2))
    m_hat = basis.significant
    contrib = _accel.map_contribution(
        np.ascontiguousarray(grid.points(), dtype=np.float64),
        np.ascontiguousarray(directions, dtype=np.float64),
        np.ascontiguousarray(np.conj(weights)),
        float(basis.omega),
        np.ascontiguousarray(basis.left[:, :m_hat]),
        np.ascontiguousarray(np.conj(basis.right[:, :m_hat])),
    )
    return contrib / norm_sq


def image_single(grid: SearchGrid, basis: SvdBasis, directions, test_vector) -> HeatMap:
    """Single-frequency subspace-migration map on the search grid."""
    contrib = _frequency_sum(grid, basis, directions, test_vector)
    return HeatMap(grid=grid, values=np.abs(contrib).reshape(grid.shape()),
                   label=f"single(omega={basis.omega:g})")


def image_multi(grid: SearchGrid, bases, directions, test_vector) -> HeatMap:
    """Multi-frequency map: modulus of the frequency-summed contributions / S.

    Bases are processed in the order given (ascending frequency by
    convention); the modulus is taken after the sum over frequencies.
    """
    bases = list(bases)
    if not bases:
        raise UsageError("image_multi requires at least one frequency")
    acc = np.zeros(grid.nx * grid.ny, dtype=np.complex128)
    for basis in bases:
        acc += _frequency_sum(grid, basis, directions, test_vector)
    values = np.abs(acc) / len(bases)
    return HeatMap(grid=grid, values=values.reshape(grid.shape()),
                   label=f"multi(S={len(bases)})")


def write_heatmap_csv(heatmap: HeatMap, path) -> None:
    """CSV rows 'x,y,value', row-major by y then x, 17 significant digits."""
    xs = heatmap.grid.xs()
    ys = heatmap.grid.ys()
    vals = heatmap.values
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("x,y,value\n")
        for iy in range(heatmap.grid.ny):
            y = ys[iy]
            for ix in range(heatmap.grid.nx):
                fh.write(f"{xs[ix]:.17g},{y:.17g},{vals[iy, ix]:.17g}\n")


def read_heatmap_csv(path) -> HeatMap:
    """Rebuild a HeatMap from its CSV form."""
    xs, ys, vs = [], [], []
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "x,y,value":
            raise ConfigurationError(f"unexpected heatmap CSV header {header!r}")
        for line in fh:
            x, y, v = line.strip().split(",")
            xs.append(float(x))
            ys.append(float(y))
            vs.append(float(v))
    ux = np.unique(xs)
    uy = np.unique(ys)
    if len(ux) * len(uy) != len(vs):
        raise ConfigurationError("heatmap CSV is not a full regular grid")
    step = float(ux[1] - ux[0]) if len(ux) > 1 else (float(uy[1] - uy[0]) if len(uy) > 1 else 1.0)
    grid = SearchGrid(x_start=float(ux[0]), y_start=float(uy[0]), step=step,
                      nx=len(ux), ny=len(uy))
    values = np.asarray(vs, dtype=float).reshape(len(uy), len(ux))
    return HeatMap(grid=grid, values=values, label="from-csv")


def write_heatmap_pgm(heatmap: HeatMap, path) -> None:
    """8-bit binary PGM; values mapped affinely from [0, max] to [0, 255].

    The map maximum is recorded in the comment line.  Rows run from the top
    of the image, i.e. descending y, so the file previews like a plot.
    """
    vals = heatmap.values
    vmax = float(vals.max()) if vals.size else 0.0
    if vmax > 0:
        scaled = np.rint(vals / vmax * 255.0).astype(np.uint8)
    else:
        scaled = np.zeros_like(vals, dtype=np.uint8)
    header = f"P5\n# max={vmax:.17g}\n{heatmap.grid.nx} {heatmap.grid.ny}\n255\n"
    with open(path, "wb") as fh:
        fh.write(header.encode("ascii"))
        fh.write(scaled[::-1].tobytes())
