"""Subspace-migration imaging workbench for small 2-D electromagnetic scatterers.

Synthesizes multi-static far-field data (single-scattering or
multiple-scattering, with calibrated noise), forms single- and
multi-frequency subspace-migration maps from the singular vectors of the
response matrix, and checks the maps against their analytic Bessel-function
envelopes.
"""

__version__ = "0.1.0"

from ._accel import BACKEND
from .exceptions import ConfigurationError, DomainError, SolveError, UsageError
from .forward import MsrMatrix, add_awgn, green_function, msr_born, msr_foldy_lax
from .migration import (
    HeatMap,
    SvdBasis,
    image_multi,
    image_single,
    significant_count,
    steering_vector,
    svd_decompose,
)
from .scene import (
    Scatterer,
    Scene,
    SearchGrid,
    frequencies_from_wavelengths,
    make_grid,
    polarization_tensor,
    uniform_wavelengths,
    unit_directions,
)
from .specfun import bessel_j0, bessel_j1, bessel_y0, hankel0_first
from .theory import (
    ComparisonReport,
    circle_integral_check,
    compare_maps,
    extract_peaks,
    j1_squared_integral,
    predicted_multi_map,
    predicted_single_map,
)

__all__ = [
    "BACKEND",
    "__version__",
    "ConfigurationError",
    "DomainError",
    "SolveError",
    "UsageError",
    "MsrMatrix",
    "add_awgn",
    "green_function",
    "msr_born",
    "msr_foldy_lax",
    "HeatMap",
    "SvdBasis",
    "image_multi",
    "image_single",
    "significant_count",
    "steering_vector",
    "svd_decompose",
    "Scatterer",
    "Scene",
    "SearchGrid",
    "frequencies_from_wavelengths",
    "make_grid",
    "polarization_tensor",
    "uniform_wavelengths",
    "unit_directions",
    "bessel_j0",
    "bessel_j1",
    "bessel_y0",
    "hankel0_first",
    "ComparisonReport",
    "circle_integral_check",
    "compare_maps",
    "extract_peaks",
    "j1_squared_integral",
    "predicted_multi_map",
    "predicted_single_map",
]
