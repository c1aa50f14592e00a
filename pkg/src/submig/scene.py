"""Physical configurations: scatterers, direction sets, frequencies, grids."""

import warnings
from dataclasses import dataclass, field

import numpy as np

from .exceptions import ConfigurationError, DomainError

__all__ = [
    "Scatterer",
    "Scene",
    "SearchGrid",
    "unit_directions",
    "uniform_wavelengths",
    "frequencies_from_wavelengths",
    "polarization_tensor",
    "make_grid",
]


@dataclass(frozen=True)
class Scatterer:
    """Small homogeneous disk: center location, radius and material contrast."""

    location: tuple
    radius: float = 0.1
    permittivity: float = 5.0
    permeability: float = 5.0

    def __post_init__(self):
        loc = tuple(float(v) for v in self.location)
        if len(loc) != 2 or not all(np.isfinite(loc)):
            raise ConfigurationError(f"scatterer location must be a finite 2D point, got {self.location!r}")
        object.__setattr__(self, "location", loc)
        if not (np.isfinite(self.radius) and self.radius > 0):
            raise ConfigurationError(f"scatterer radius must be positive, got {self.radius!r}")


@dataclass(frozen=True)
class Scene:
    """Immutable experiment geometry: scatterers, background, directions, wavelengths.

    Invariants enforced at construction: distinct scatterer locations, material
    contrasts above the background, more directions than scatterers, and a
    strictly monotone wavelength list.  Separations below four radii only
    warn; the point-scatterer data model degrades gracefully there.
    """

    scatterers: tuple
    eps0: float = 1.0
    mu0: float = 1.0
    direction_count: int = 20
    wavelengths: tuple = (0.5,)

    def __post_init__(self):
        object.__setattr__(self, "scatterers", tuple(self.scatterers))
        object.__setattr__(self, "wavelengths", tuple(float(w) for w in self.wavelengths))
        if not self.scatterers:
            raise ConfigurationError("scene requires at least one scatterer")
        if self.eps0 <= 0 or self.mu0 <= 0:
            raise ConfigurationError("background constants must be positive")
        for s in self.scatterers:
            if s.permittivity <= self.eps0:
                raise ConfigurationError(
                    f"scatterer permittivity {s.permittivity} must exceed background {self.eps0}")
            if s.permeability <= self.mu0:
                raise ConfigurationError(
                    f"scatterer permeability {s.permeability} must exceed background {self.mu0}")
        locs = self.locations()
        for i in range(len(locs)):
            for k in range(i + 1, len(locs)):
                sep = float(np.hypot(*(locs[i] - locs[k])))
                if sep == 0.0:
                    raise ConfigurationError(f"scatterers {i} and {k} share a location")
                min_sep = 4.0 * max(self.scatterers[i].radius, self.scatterers[k].radius)
                if sep < min_sep:
                    warnings.warn(
                        f"scatterers {i} and {k} are separated by {sep:.3g} "
                        f"(< 4 radii = {min_sep:.3g}); point-scatterer data may be inaccurate",
                        stacklevel=2,
                    )
        if self.direction_count <= len(self.scatterers):
            raise ConfigurationError(
                f"direction count {self.direction_count} must exceed the "
                f"number of scatterers {len(self.scatterers)}")
        lam = np.asarray(self.wavelengths)
        if np.any(lam <= 0):
            raise ConfigurationError("wavelengths must be positive")
        if len(lam) > 1:
            d = np.diff(lam)
            if not (np.all(d > 0) or np.all(d < 0)):
                raise ConfigurationError("wavelength list must be strictly monotone")

    def locations(self) -> np.ndarray:
        return np.array([s.location for s in self.scatterers], dtype=float)

    def radii(self) -> np.ndarray:
        return np.array([s.radius for s in self.scatterers], dtype=float)

    def permittivities(self) -> np.ndarray:
        return np.array([s.permittivity for s in self.scatterers], dtype=float)

    def permeabilities(self) -> np.ndarray:
        return np.array([s.permeability for s in self.scatterers], dtype=float)

    def directions(self) -> np.ndarray:
        return unit_directions(self.direction_count)

    def omegas(self) -> np.ndarray:
        """Angular frequencies 2 pi / lambda, ascending."""
        return np.sort(2.0 * np.pi / np.asarray(self.wavelengths))


@dataclass(frozen=True)
class SearchGrid:
    """Regular rectangular sampling of the search domain."""

    x_start: float
    y_start: float
    step: float
    nx: int
    ny: int

    def xs(self) -> np.ndarray:
        return self.x_start + self.step * np.arange(self.nx)

    def ys(self) -> np.ndarray:
        return self.y_start + self.step * np.arange(self.ny)

    def points(self) -> np.ndarray:
        """All grid points, shape (nx*ny, 2), row-major by y then x."""
        xx, yy = np.meshgrid(self.xs(), self.ys())
        return np.column_stack([xx.ravel(), yy.ravel()])

    def shape(self) -> tuple:
        return (self.ny, self.nx)

    def covers(self, point) -> bool:
        x, y = point
        return (
            self.x_start - 1e-12 <= x <= self.x_start + self.step * (self.nx - 1) + 1e-12
            and self.y_start - 1e-12 <= y <= self.y_start + self.step * (self.ny - 1) + 1e-12
        )


def unit_directions(n: int) -> np.ndarray:
    """Equispaced unit vectors d_p = (cos 2 pi p / n, sin 2 pi p / n), p = 1..n."""
    if n < 1:
        raise ConfigurationError(f"direction count must be >= 1, got {n}")
    theta = 2.0 * np.pi * np.arange(1, n + 1) / n
    return np.column_stack([np.cos(theta), np.sin(theta)])


def uniform_wavelengths(first: float, last: float, count: int) -> np.ndarray:
    """`count` wavelengths uniformly spaced from `first` to `last` inclusive."""
    if count < 1:
        raise ConfigurationError(f"wavelength count must be >= 1, got {count}")
    if first <= 0 or last <= 0:
        raise ConfigurationError("wavelengths must be positive")
    if count == 1:
        if first != last:
            raise ConfigurationError("a single wavelength requires first == last")
        return np.array([first])
    return np.linspace(first, last, count)


def frequencies_from_wavelengths(first: float, last: float, count: int) -> np.ndarray:
    """Angular frequencies 2 pi / lambda for a uniform wavelength sweep, ascending."""
    return np.sort(2.0 * np.pi / uniform_wavelengths(first, last, count))


def polarization_tensor(scatterer: Scatterer, mu0: float) -> np.ndarray:
    """Magnetic-contrast dipole tensor (2 mu0 / (mu_m + mu0)) * pi * I2.

    The unit-disk area pi enters because the scatterer radius is factored
    out of the shape; the radius appears in the forward model instead.
    """
    denom = scatterer.permeability + mu0
    if denom == 0:
        raise DomainError("polarization tensor undefined: mu_m + mu0 == 0")
    return (2.0 * mu0 / denom) * np.pi * np.eye(2)


def make_grid(x_interval, y_interval, step: float) -> SearchGrid:
    """Regular grid over [x0,x1] x [y0,y1] with the given step.

    Points per axis: floor(range/step) + 1, so both endpoints are included
    whenever the step divides the range.
    """
    if not (np.isfinite(step) and step > 0):
        raise ConfigurationError(f"grid step must be positive, got {step!r}")
    (x0, x1), (y0, y1) = x_interval, y_interval
    if not (x1 > x0 and y1 > y0):
        raise ConfigurationError("grid intervals must be nondegenerate")
    # 1e-9 relative slack so exact divisions are not lost to rounding
    nx = int(np.floor((x1 - x0) / step * (1 + 1e-12) + 1e-9)) + 1
    ny = int(np.floor((y1 - y0) / step * (1 + 1e-12) + 1e-9)) + 1
    return SearchGrid(x_start=float(x0), y_start=float(y0), step=float(step), nx=nx, ny=ny)
