#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-NumPy fallback.

Times the two hot paths on realistic problem sizes: Bessel evaluation over
a dense grid (theory envelopes) and the per-frequency imaging-map
accumulation (steering + singular-vector pairing at every grid point).
Imports both kernel modules directly, so the SUBMIG_BACKEND env flag does
not matter here.

Usage: python benchmarks/bench_backends.py [--repeats 5]
"""

import argparse
import time

import numpy as np

from submig._accel import kernels_numpy

try:
    from submig._accel import kernels_numba

    HAVE_NUMBA = True
except ImportError:
    kernels_numba = None
    HAVE_NUMBA = False

from submig import Scatterer, Scene, make_grid, msr_born, significant_count, svd_decompose
from submig.migration import _direction_weights


def _time(fn, repeats):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_bessel(repeats):
    x = np.linspace(0.0, 40.0, 201 * 201 * 3)
    rows = []
    for name, j0 in (("numpy", kernels_numpy.j0_array),
                     ("numba", kernels_numba.j0_array if HAVE_NUMBA else None)):
        if j0 is None:
            rows.append((name, None))
            continue
        j0(x[:16].copy())  # warm-up / compile
        rows.append((name, _time(lambda f=j0: f(x), repeats)))
    return "bessel_j0 over 121k points", rows


def bench_map(repeats):
    scene = Scene(
        scatterers=(
            Scatterer(location=(0.4, 0.0)),
            Scatterer(location=(-0.6, 0.3)),
            Scatterer(location=(0.1, -0.5)),
        ),
        wavelengths=(0.4,),
    )
    grid = make_grid((-1, 1), (-1, 1), 0.01)
    omega = float(scene.omegas()[0])
    basis = svd_decompose(msr_born(scene, omega))
    m_hat = significant_count(basis, 0.01)
    dirs = scene.directions()
    weights = np.conj(_direction_weights(dirs, (5.0, 1.0, 1.0)))
    pts = np.ascontiguousarray(grid.points())
    u_sel = np.ascontiguousarray(basis.left[:, :m_hat])
    v_sel = np.ascontiguousarray(np.conj(basis.right[:, :m_hat]))

    rows = []
    for name, kern in (("numpy", kernels_numpy.map_contribution),
                       ("numba", kernels_numba.map_contribution if HAVE_NUMBA else None)):
        if kern is None:
            rows.append((name, None))
            continue
        kern(pts[:64], dirs, weights, omega, u_sel, v_sel)  # warm-up / compile
        rows.append((name, _time(lambda k=kern: k(pts, dirs, weights, omega, u_sel, v_sel),
                                 repeats)))
    # consistency between backends
    if HAVE_NUMBA:
        a = kernels_numpy.map_contribution(pts, dirs, weights, omega, u_sel, v_sel)
        b = kernels_numba.map_contribution(pts, dirs, weights, omega, u_sel, v_sel)
        scale = np.max(np.abs(a))
        print(f"  backend agreement (map): max |diff| / max |value| = "
              f"{np.max(np.abs(a - b)) / scale:.2e}")
    return f"imaging map, 201x201 grid, N=20, M-hat={m_hat}", rows


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    print(f"numba available: {HAVE_NUMBA}")
    for title, rows in (bench_bessel(args.repeats), bench_map(args.repeats)):
        print(f"\n{title}")
        base = None
        for name, secs in rows:
            if secs is None:
                print(f"  {name:6s}  (unavailable)")
                continue
            if base is None:
                base = secs
            print(f"  {name:6s}  {secs * 1e3:9.2f} ms   x{base / secs:.2f}")


if __name__ == "__main__":
    main()
