"""Far-field data synthesis.

Three generators for the multi-static response (MSR) matrix F_pq over the
shared incident/observation direction set: the single-scattering (Born)
asymptotic formula, a self-consistent point-scatterer multiple-scattering
solver calibrated against it, and measured-power additive white Gaussian
noise.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import ConfigurationError, DomainError, SolveError
from .scene import Scene, polarization_tensor
from .specfun import _hankel1_first, hankel0_first

__all__ = [
    "MsrMatrix",
    "green_function",
    "msr_born",
    "msr_foldy_lax",
    "add_awgn",
    "write_msr_csv",
    "read_msr_csv",
]

# Condition-number ceiling for the coupled multiple-scattering solve.
_COND_LIMIT = 1e12


@dataclass
class MsrMatrix:
    """Dense N x N complex far-field response matrix at one frequency."""

    entries: np.ndarray
    omega: float
    provenance: str

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ConfigurationError(f"MSR matrix must be square, got shape {arr.shape}")
        self.entries = arr

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]


def green_function(x, y, omega: float, mu0: float = 1.0) -> complex:
    """Two-dimensional time-harmonic Green function -mu0 (j/4) H0(omega |x-y|)."""
    if omega <= 0:
        raise DomainError(f"green_function requires omega > 0, got {omega}")
    dist = float(np.hypot(x[0] - y[0], x[1] - y[1]))
    if dist == 0.0:
        raise DomainError("green_function is singular at coincident points")
    return -mu0 * 0.25j * hankel0_first(omega * dist)


def _contrast_strengths(scene: Scene, omega: float):
    """Monopole and dipole source strengths per scatterer.

    Chosen so the zero-coupling far field reproduces msr_born exactly after
    the 1/omega^2 far-field calibration.
    """
    rho2 = scene.radii() ** 2
    root = np.sqrt(scene.eps0 * scene.mu0)
    mono = rho2 * omega**2 * (scene.permittivities() - scene.eps0) * np.pi / root
    dip = np.array(
        [rho2[m] * polarization_tensor(s, scene.mu0)[0, 0]
         for m, s in enumerate(scene.scatterers)]
    )
    return mono, dip


def msr_born(scene: Scene, omega: float) -> MsrMatrix:
    """Single-scattering MSR matrix.

    F_pq = sum_m rho_m^2 [ (eps_m - eps0)/sqrt(eps0 mu0) pi
                           + (2 mu0/(mu_m + mu0)) pi (d_p . d_q) ]
                 exp(j omega (d_p + d_q) . r_m)

    The frequency-dependent amplitude constant of the far-field expansion is
    dropped; it rescales every entry equally and is irrelevant to the
    singular-value analysis downstream.
    """
    if omega <= 0:
        raise DomainError(f"msr_born requires omega > 0, got {omega}")
    dirs = scene.directions()
    mono, dip = _contrast_strengths(scene, omega)
    mono = mono / omega**2
    ph = np.exp(1j * omega * (dirs @ scene.locations().T))  # (N, M)
    entries = (ph * mono) @ ph.T + (dirs @ dirs.T) * ((ph * dip) @ ph.T)
    # the summand is symmetric in (p, q); mirror the upper triangle so the
    # matrix is symmetric to the bit, not just to rounding
    entries = np.triu(entries) + np.triu(entries, 1).T
    return MsrMatrix(entries=entries, omega=float(omega), provenance="born")


def _pair_kernel(dvec: np.ndarray, omega: float) -> np.ndarray:
    """Symmetric 3x3 propagation block between two scatterers.

    Built from the outgoing monopole kernel (j/4) H0(omega t) and its first
    and second observation-point derivatives; rows/columns are ordered
    (field value, gradient x, gradient y).
    """
    t = float(np.hypot(dvec[0], dvec[1]))
    h0 = hankel0_first(omega * t)
    h1 = _hankel1_first(omega * t)
    g = 0.25j * h0
    fp = -0.25j * omega * h1
    fpp = -0.25j * omega**2 * (h0 - h1 / (omega * t))
    e = dvec / t
    ee = np.outer(e, e)
    grad = fp * e
    hess = fpp * ee + (fp / t) * (np.eye(2) - ee)
    k = np.empty((3, 3), dtype=np.complex128)
    k[0, 0] = g
    k[0, 1:] = grad
    k[1:, 0] = grad
    k[1:, 1:] = hess
    return k


def msr_foldy_lax(scene: Scene, omega: float, coupling: str = "full") -> MsrMatrix:
    """Multiple-scattering MSR matrix for point-like scatterers.

    Solves the self-consistent system for the exciting field value u_m and
    gradient g_m at each scatterer (3 unknowns per scatterer); each one
    re-radiates a monopole proportional to u_m and a dipole proportional to
    T(r_m) g_m.  Mutual coupling carries the radiation-damped (unitarized)
    strengths a/(1 - j a/4) and b/(1 - j b omega^2/8), split symmetrically
    between the two partners of each pair, which keeps the output exactly
    reciprocal and reduces to the bare model for weak contrast.  Far-field
    extraction uses the large-argument Hankel form; the calibration makes
    the output equal msr_born whenever coupling is absent (single scatterer,
    or coupling="none").

    coupling: "full" (monopole + dipole), "monopole" (drop dipole coupling,
    dipoles still radiate), or "none" (calibration test hook).
    """
    if omega <= 0:
        raise DomainError(f"msr_foldy_lax requires omega > 0, got {omega}")
    if coupling not in ("full", "monopole", "none"):
        raise ConfigurationError(f"unknown coupling mode {coupling!r}")
    dirs = scene.directions()
    locs = scene.locations()
    n_dirs = len(dirs)
    n_sc = len(locs)
    mono, dip = _contrast_strengths(scene, omega)

    # sqrt of the per-scatterer damping factors, applied on both sides of
    # every mutual block
    damp_mono = np.sqrt(1.0 / (1.0 - 0.25j * mono))
    damp_dip = np.sqrt(1.0 / (1.0 - 0.125j * dip * omega**2))

    system = np.eye(3 * n_sc, dtype=np.complex128)
    if coupling != "none" and n_sc > 1:
        for m in range(n_sc):
            r_m = np.diag([damp_mono[m], damp_dip[m], damp_dip[m]])
            for n in range(n_sc):
                if m == n:
                    continue
                r_n = np.diag([damp_mono[n], damp_dip[n], damp_dip[n]])
                kern = _pair_kernel(locs[m] - locs[n], omega)
                if coupling == "monopole":
                    kern = kern.copy()
                    kern[0, 1:] = 0.0
                    kern[1:, :] = 0.0
                strengths = np.diag([mono[n], dip[n], dip[n]])
                system[3 * m:3 * m + 3, 3 * n:3 * n + 3] -= (r_m @ kern @ r_n) @ strengths

    # incident plane waves: value and gradient at each scatterer, all
    # incident directions at once
    ph_inc = np.exp(1j * omega * (locs @ dirs.T))  # (M, N)
    rhs = np.empty((3 * n_sc, n_dirs), dtype=np.complex128)
    for m in range(n_sc):
        rhs[3 * m] = ph_inc[m]
        rhs[3 * m + 1] = 1j * omega * dirs[:, 0] * ph_inc[m]
        rhs[3 * m + 2] = 1j * omega * dirs[:, 1] * ph_inc[m]

    exciting = _solve_coupled(system, rhs)

    # far field at observation -d_p, calibrated by 1/omega^2 to match msr_born
    ph_obs = np.exp(1j * omega * (dirs @ locs.T))  # (N, M)
    entries = np.zeros((n_dirs, n_dirs), dtype=np.complex128)
    for n in range(n_sc):
        u_n = exciting[3 * n]
        g_n = exciting[3 * n + 1:3 * n + 3]
        radiated = mono[n] * u_n - 1j * omega * dip[n] * (dirs @ g_n)
        entries += ph_obs[:, n:n + 1] * radiated
    entries /= omega**2
    return MsrMatrix(entries=entries, omega=float(omega), provenance="foldy-lax")


def _solve_coupled(system: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    cond = np.linalg.cond(system)
    if not np.isfinite(cond) or cond > _COND_LIMIT:
        raise SolveError(
            f"multiple-scattering system is numerically singular "
            f"(condition number {cond:.3e}); scatterers too close or resonant")
    try:
        return np.linalg.solve(system, rhs)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - cond guard first
        raise SolveError(f"multiple-scattering solve failed: {exc}") from exc


def add_awgn(msr: MsrMatrix, snr_db: float, seed: int, stream: int = 0) -> MsrMatrix:
    """Additive white Gaussian noise at a measured signal-to-noise ratio.

    Signal power is measured as the mean of |F_pq|^2 over all entries; the
    noise power P * 10^(-snr_db/10) is split equally between real and
    imaginary parts.  Randomness comes from NumPy's Philox 4x64
    counter-based generator keyed by (seed, stream), so outputs are
    bit-reproducible and independent streams (one per frequency) can be
    drawn in any order.  snr_db = +inf returns the input unchanged.
    """
    if np.isnan(snr_db):
        raise DomainError("snr_db must not be NaN")
    if not np.all(np.isfinite(msr.entries)):
        raise DomainError("MSR matrix must be finite")
    if np.isinf(snr_db) and snr_db > 0:
        return MsrMatrix(entries=msr.entries.copy(), omega=msr.omega,
                         provenance=msr.provenance)
    if not (0 <= int(seed) < 2**64 and 0 <= int(stream) < 2**64):
        raise ConfigurationError("seed and stream must fit in uint64")
    power = float(np.mean(np.abs(msr.entries) ** 2))
    if power == 0.0:
        raise DomainError("SNR undefined for an all-zero matrix")
    noise_power = power * 10.0 ** (-snr_db / 10.0)
    gen = np.random.Generator(
        np.random.Philox(key=np.array([seed, stream], dtype=np.uint64)))
    scale = np.sqrt(noise_power / 2.0)
    shape = msr.entries.shape
    noise = scale * (gen.standard_normal(shape) + 1j * gen.standard_normal(shape))
    return MsrMatrix(
        entries=msr.entries + noise,
        omega=msr.omega,
        provenance=f"noisy({msr.provenance}, snr_db={snr_db:g}, seed={seed}, stream={stream})",
    )


def write_msr_csv(msr: MsrMatrix, path) -> None:
    """Dump entries as 'p,q,re,im' rows (1-based indices, 17 significant digits)."""
    n = msr.dimension
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("p,q,re,im\n")
        for p in range(n):
            for q in range(n):
                v = msr.entries[p, q]
                fh.write(f"{p + 1},{q + 1},{v.real:.17g},{v.imag:.17g}\n")


def read_msr_csv(path) -> np.ndarray:
    """Read a matrix written by write_msr_csv; returns the complex entries."""
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "p,q,re,im":
            raise ConfigurationError(f"unexpected MSR CSV header {header!r}")
        for line in fh:
            p, q, re, im = line.strip().split(",")
            rows.append((int(p), int(q), float(re), float(im)))
    n = max(r[0] for r in rows)
    out = np.zeros((n, n), dtype=np.complex128)
    for p, q, re, im in rows:
        out[p - 1, q - 1] = re + 1j * im
    return out
