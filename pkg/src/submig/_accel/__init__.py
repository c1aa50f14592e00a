"""Kernel backend selection.

The env flag SUBMIG_BACKEND picks the implementation of the hot kernels:

    SUBMIG_BACKEND=numba   require the numba backend (ImportError if absent)
    SUBMIG_BACKEND=numpy   force the pure-NumPy fallback
    unset / auto           numba when importable, NumPy otherwise

Evaluated once at import.  ``benchmarks/bench_backends.py`` times the two
implementations against each other.
"""

import os

_requested = os.environ.get("SUBMIG_BACKEND", "auto").lower()
if _requested not in ("auto", "numba", "numpy"):
    raise ImportError(
        f"SUBMIG_BACKEND must be 'auto', 'numba' or 'numpy', got {_requested!r}"
    )

if _requested in ("auto", "numba"):
    try:
        from . import kernels_numba as _impl

        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import kernels_numpy as _impl

        BACKEND = "numpy"
else:
    from . import kernels_numpy as _impl

    BACKEND = "numpy"

j0_array = _impl.j0_array
j1_array = _impl.j1_array
y0_array = _impl.y0_array
y1_array = _impl.y1_array
map_contribution = _impl.map_contribution
