"""Declarative experiment runner.

Wires scene -> forward -> migration -> theory from a strict JSON
configuration and emits maps (CSV/PGM), comparison reports, and a manifest
holding every number needed to re-run the experiment bit-identically.

Subcommands: run, theory, compare.  Exit codes: 0 success, 2 configuration
error, 3 numeric failure, 4 I/O failure.
"""

import argparse
import importlib.resources
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from ._accel import BACKEND
from .exceptions import ConfigurationError, DomainError, SolveError, UsageError
from .forward import add_awgn, msr_born, msr_foldy_lax, write_msr_csv
from .migration import (
    HeatMap,
    image_multi,
    image_single,
    read_heatmap_csv,
    significant_count,
    svd_decompose,
    write_heatmap_csv,
    write_heatmap_pgm,
)
from .scene import Scatterer, Scene, make_grid, uniform_wavelengths
from .theory import compare_maps, extract_peaks, predicted_multi_map, predicted_single_map

__all__ = ["ExperimentConfig", "load_config", "run_experiment", "export_heatmap", "main"]

_MODELS = ("foldy-lax", "born")
_FORMATS = ("csv", "pgm")

ENV_OUTPUT_DIR = "SUBMIG_OUTPUT_DIR"

_DEFAULTS = {
    "radius": 0.1,
    "background": 1.0,
    "direction_count": 20,
    "wavelength_first": 0.5,
    "wavelength_last": 0.3,
    "wavelength_count": 10,
    "snr_db": 10.0,
    "seed": 0,
    "threshold": 0.01,
    "test_vector": (5.0, 1.0, 1.0),
    "grid_x": (-1.0, 1.0),
    "grid_y": (-1.0, 1.0),
    "grid_step": 0.01,
    "model": "foldy-lax",
}


@dataclass
class ExperimentConfig:
    scene: Scene
    grid: object
    model: str
    threshold: float
    test_vector: tuple
    snr_db: float
    seed: int
    noise: bool
    output_dir: str
    formats: tuple
    dump_msr: bool
    compare_theory: bool
    profile: bool
    s_sweep: tuple
    coupling: str


def _require_keys(obj: dict, allowed, where: str):
    for key in obj:
        if key not in allowed:
            raise ConfigurationError(f"unknown key {key!r} in {where}")


def _get(obj, key, kind, where, default=None, required=False):
    if key not in obj or obj[key] is None:
        if required:
            raise ConfigurationError(f"missing required field {where}.{key}")
        return default
    val = obj[key]
    if kind is float and isinstance(val, (int, float)) and not isinstance(val, bool):
        return float(val)
    if kind is int and isinstance(val, int) and not isinstance(val, bool):
        return int(val)
    if kind is bool and isinstance(val, bool):
        return val
    if kind in (dict, list, str) and isinstance(val, kind):
        return val
    raise ConfigurationError(f"field {where}.{key} must be of type {kind.__name__}")


def _parse_test_vector(raw, where):
    if raw is None:
        return tuple(complex(v) for v in _DEFAULTS["test_vector"])
    if not isinstance(raw, list) or len(raw) != 3:
        raise ConfigurationError(f"{where} must be a 3-element list")
    out = []
    for v in raw:
        if isinstance(v, (int, float)) and not isinstance(v, bool):
            out.append(complex(v))
        elif isinstance(v, list) and len(v) == 2:
            out.append(complex(float(v[0]), float(v[1])))
        else:
            raise ConfigurationError(
                f"{where} entries must be numbers or [re, im] pairs")
    if not any(out):
        raise ConfigurationError(f"{where} must be nonzero")
    return tuple(out)


def load_config(path) -> ExperimentConfig:
    """Parse and fully validate a JSON experiment configuration.

    Unknown keys are rejected, defaults fill every omitted field, and the
    scene/grid invariants are checked eagerly so failures name the field.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(
            f"{path}: JSON parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(raw, dict):
        raise ConfigurationError(f"{path}: top level must be a JSON object")
    _require_keys(raw, {"scene", "wavelengths", "noise", "model", "threshold",
                        "test_vector", "grid", "output", "compare_theory",
                        "profile", "s_sweep", "coupling"}, "config")

    scene_raw = _get(raw, "scene", dict, "config", required=True)
    _require_keys(scene_raw, {"scatterers", "background", "direction_count"}, "scene")
    scat_raw = scene_raw.get("scatterers")
    if not isinstance(scat_raw, list) or not scat_raw:
        raise ConfigurationError("scene.scatterers must be a nonempty list")
    scatterers = []
    for i, s in enumerate(scat_raw):
        where = f"scene.scatterers[{i}]"
        if not isinstance(s, dict):
            raise ConfigurationError(f"{where} must be an object")
        _require_keys(s, {"location", "radius", "permittivity", "permeability"}, where)
        loc = s.get("location")
        if not isinstance(loc, list) or len(loc) != 2:
            raise ConfigurationError(f"{where}.location must be [x, y]")
        scatterers.append(Scatterer(
            location=(float(loc[0]), float(loc[1])),
            radius=_get(s, "radius", float, where, default=_DEFAULTS["radius"]),
            permittivity=_get(s, "permittivity", float, where, default=5.0),
            permeability=_get(s, "permeability", float, where, default=5.0),
        ))
    bg = scene_raw.get("background") or {}
    _require_keys(bg, {"permittivity", "permeability"}, "scene.background")
    eps0 = _get(bg, "permittivity", float, "scene.background", default=_DEFAULTS["background"])
    mu0 = _get(bg, "permeability", float, "scene.background", default=_DEFAULTS["background"])
    n_dirs = _get(scene_raw, "direction_count", int, "scene",
                  default=_DEFAULTS["direction_count"])

    wl = raw.get("wavelengths") or {}
    _require_keys(wl, {"first", "last", "count"}, "wavelengths")
    lam_first = _get(wl, "first", float, "wavelengths", default=_DEFAULTS["wavelength_first"])
    lam_last = _get(wl, "last", float, "wavelengths", default=_DEFAULTS["wavelength_last"])
    lam_count = _get(wl, "count", int, "wavelengths", default=_DEFAULTS["wavelength_count"])
    if lam_first <= 0 or lam_last <= 0 or lam_count < 1:
        raise ConfigurationError("wavelengths must be positive with count >= 1")
    wavelengths = uniform_wavelengths(lam_first, lam_last, lam_count)

    scene = Scene(scatterers=tuple(scatterers), eps0=eps0, mu0=mu0,
                  direction_count=n_dirs, wavelengths=tuple(wavelengths))

    noise_raw = raw.get("noise", {"snr_db": _DEFAULTS["snr_db"], "seed": _DEFAULTS["seed"]})
    if noise_raw is None:
        noise, snr_db, seed = False, float("inf"), _DEFAULTS["seed"]
    else:
        _require_keys(noise_raw, {"snr_db", "seed"}, "noise")
        noise = True
        snr_db = _get(noise_raw, "snr_db", float, "noise", default=_DEFAULTS["snr_db"])
        seed = _get(noise_raw, "seed", int, "noise", default=_DEFAULTS["seed"])
        if seed < 0:
            raise ConfigurationError("noise.seed must be nonnegative")

    model = _get(raw, "model", str, "config", default=_DEFAULTS["model"])
    if model not in _MODELS:
        raise ConfigurationError(f"model must be one of {_MODELS}, got {model!r}")
    coupling = _get(raw, "coupling", str, "config", default="full")
    if coupling not in ("full", "monopole", "none"):
        raise ConfigurationError(f"coupling must be full, monopole or none, got {coupling!r}")

    threshold = _get(raw, "threshold", float, "config", default=_DEFAULTS["threshold"])
    if not (0.0 < threshold < 1.0):
        raise ConfigurationError(f"threshold must lie in (0, 1), got {threshold}")
    test_vector = _parse_test_vector(raw.get("test_vector"), "test_vector")

    grid_raw = raw.get("grid") or {}
    _require_keys(grid_raw, {"x", "y", "step"}, "grid")
    gx = grid_raw.get("x", list(_DEFAULTS["grid_x"]))
    gy = grid_raw.get("y", list(_DEFAULTS["grid_y"]))
    step = _get(grid_raw, "step", float, "grid", default=_DEFAULTS["grid_step"])
    if not (isinstance(gx, list) and isinstance(gy, list) and len(gx) == 2 and len(gy) == 2):
        raise ConfigurationError("grid.x and grid.y must be [lo, hi] intervals")
    grid = make_grid((float(gx[0]), float(gx[1])), (float(gy[0]), float(gy[1])), step)
    for s in scene.scatterers:
        if not grid.covers(s.location):
            raise ConfigurationError(
                f"grid does not cover scatterer at {s.location}")

    out_raw = raw.get("output") or {}
    _require_keys(out_raw, {"directory", "formats", "dump_msr"}, "output")
    output_dir = _get(out_raw, "directory", str, "output", default="out")
    formats = tuple(out_raw.get("formats", ["csv", "pgm"]))
    for f in formats:
        if f not in _FORMATS:
            raise ConfigurationError(f"output.formats entries must be in {_FORMATS}, got {f!r}")
    dump_msr = _get(out_raw, "dump_msr", bool, "output", default=False)

    compare_theory = _get(raw, "compare_theory", bool, "config", default=True)
    profile = _get(raw, "profile", bool, "config", default=False)
    sweep_raw = raw.get("s_sweep")
    if sweep_raw is not None:
        if (not isinstance(sweep_raw, list) or not sweep_raw
                or any(not isinstance(v, int) or v < 1 for v in sweep_raw)):
            raise ConfigurationError("s_sweep must be a list of positive integers")
    s_sweep = tuple(sweep_raw) if sweep_raw else ()

    return ExperimentConfig(
        scene=scene, grid=grid, model=model, threshold=threshold,
        test_vector=test_vector, snr_db=snr_db, seed=seed, noise=noise,
        output_dir=output_dir, formats=formats, dump_msr=dump_msr,
        compare_theory=compare_theory, profile=profile, s_sweep=s_sweep,
        coupling=coupling,
    )


def config_to_dict(cfg: ExperimentConfig) -> dict:
    """Fully resolved configuration, sufficient to re-run bit-identically."""
    scene = cfg.scene
    lam = list(scene.wavelengths)
    return {
        "scene": {
            "scatterers": [
                {
                    "location": list(s.location),
                    "radius": s.radius,
                    "permittivity": s.permittivity,
                    "permeability": s.permeability,
                }
                for s in scene.scatterers
            ],
            "background": {"permittivity": scene.eps0, "permeability": scene.mu0},
            "direction_count": scene.direction_count,
        },
        "wavelengths": {"first": lam[0], "last": lam[-1], "count": len(lam)},
        "noise": ({"snr_db": cfg.snr_db, "seed": cfg.seed} if cfg.noise else None),
        "model": cfg.model,
        "coupling": cfg.coupling,
        "threshold": cfg.threshold,
        "test_vector": [[v.real, v.imag] for v in cfg.test_vector],
        "grid": {
            "x": [cfg.grid.x_start, cfg.grid.x_start + cfg.grid.step * (cfg.grid.nx - 1)],
            "y": [cfg.grid.y_start, cfg.grid.y_start + cfg.grid.step * (cfg.grid.ny - 1)],
            "step": cfg.grid.step,
        },
        "output": {"directory": cfg.output_dir, "formats": list(cfg.formats),
                   "dump_msr": cfg.dump_msr},
        "compare_theory": cfg.compare_theory,
        "profile": cfg.profile,
        "s_sweep": list(cfg.s_sweep) if cfg.s_sweep else None,
    }


def export_heatmap(heatmap: HeatMap, fmt: str, path) -> None:
    """Write a map as CSV or binary PGM (idempotent given identical inputs)."""
    if fmt == "csv":
        write_heatmap_csv(heatmap, path)
    elif fmt == "pgm":
        write_heatmap_pgm(heatmap, path)
    else:
        raise ConfigurationError(f"unknown heatmap format {fmt!r}")


def _generate_msr(cfg: ExperimentConfig, omega: float):
    if cfg.model == "born":
        return msr_born(cfg.scene, omega)
    return msr_foldy_lax(cfg.scene, omega, coupling=cfg.coupling)


def _offtarget_max(heatmap: HeatMap, scene: Scene, radius: float) -> float:
    pts = heatmap.grid.points()
    dmin = np.full(len(pts), np.inf)
    for loc in scene.locations():
        np.minimum(dmin, np.hypot(pts[:, 0] - loc[0], pts[:, 1] - loc[1]), out=dmin)
    mask = dmin > radius
    if not np.any(mask):
        return 0.0
    return float(heatmap.values.ravel()[mask].max())


def run_experiment(cfg: ExperimentConfig) -> dict:
    """Run one experiment (or an S sweep) and write the artifact bundle.

    Stage order: data collection, SVD, subspace discrimination, steering,
    grid maps, theory comparison, export.  Deterministic given the seed;
    per-frequency noise uses independent streams keyed by frequency index.
    Returns the manifest (also written as manifest.json).
    """
    if cfg.s_sweep:
        return _run_sweep(cfg)
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    scene = cfg.scene
    dirs = scene.directions()
    omegas = scene.omegas()
    lam_sorted = sorted(scene.wavelengths, reverse=True)
    timings = {}
    outputs = []

    t0 = time.perf_counter()
    matrices = [_generate_msr(cfg, w) for w in omegas]
    timings["generate"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    if cfg.noise:
        matrices = [add_awgn(m, cfg.snr_db, cfg.seed, stream=s)
                    for s, m in enumerate(matrices)]
    timings["noise"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    bases = []
    freq_info = []
    for s, (m, w) in enumerate(zip(matrices, omegas)):
        basis = svd_decompose(m)
        m_hat = significant_count(basis, cfg.threshold)
        bases.append(basis)
        freq_info.append({
            "index": s + 1,
            "wavelength": float(2.0 * np.pi / w),
            "omega": float(w),
            "significant": m_hat,
            "singular_values": [float(v) for v in basis.singular_values],
        })
    timings["decompose"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    single_maps = [image_single(cfg.grid, b, dirs, cfg.test_vector) for b in bases]
    multi_map = image_multi(cfg.grid, bases, dirs, cfg.test_vector)
    timings["maps"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    comparisons = {}
    theory_maps = {}
    if cfg.compare_theory:
        locs = [tuple(l) for l in scene.locations()]
        singles = []
        for s, w in enumerate(omegas):
            pred = predicted_single_map(cfg.grid, scene, w)
            theory_maps[f"theory_single_{s + 1:02d}"] = pred
            rep = compare_maps(single_maps[s], pred, true_locations=locs)
            singles.append(json.loads(rep.to_json()))
        comparisons["single"] = singles
        if len(omegas) > 1:
            pred_multi = predicted_multi_map(cfg.grid, scene, omegas[0], omegas[-1])
        else:
            pred_multi = predicted_single_map(cfg.grid, scene, omegas[0])
        theory_maps["theory_multi"] = pred_multi
        comparisons["multi"] = json.loads(
            compare_maps(multi_map, pred_multi, true_locations=locs).to_json())
    timings["theory"] = time.perf_counter() - t0

    peaks = extract_peaks(multi_map, count=len(scene.scatterers),
                          min_separation=min(scene.wavelengths))

    t0 = time.perf_counter()
    for s, smap in enumerate(single_maps):
        for fmt in cfg.formats:
            path = out / f"single_{s + 1:02d}.{fmt}"
            export_heatmap(smap, fmt, path)
            outputs.append(path.name)
    for fmt in cfg.formats:
        path = out / f"multi.{fmt}"
        export_heatmap(multi_map, fmt, path)
        outputs.append(path.name)
    for name, tmap in theory_maps.items():
        for fmt in cfg.formats:
            path = out / f"{name}.{fmt}"
            export_heatmap(tmap, fmt, path)
            outputs.append(path.name)
    if cfg.dump_msr:
        for s, m in enumerate(matrices):
            path = out / f"msr_{s + 1:02d}.csv"
            write_msr_csv(m, path)
            outputs.append(path.name)
    for key, rep in comparisons.items():
        path = out / f"compare_{key}.json"
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(rep, fh, indent=2)
        outputs.append(path.name)
    timings["export"] = time.perf_counter() - t0

    manifest = {
        "package": f"submig {__version__}",
        "backend": BACKEND,
        "config": config_to_dict(cfg),
        "model": cfg.model,
        "seed": cfg.seed if cfg.noise else None,
        "frequencies": freq_info,
        "peaks": {
            "points": [list(p) for p in peaks.points],
            "values": peaks.values,
            "complete": peaks.complete,
        },
        "offtarget_max": _offtarget_max(multi_map, scene, lam_sorted[-1]),
        "comparisons": comparisons,
        "timings": timings,
        "outputs": outputs,
    }
    with open(out / "manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2)
    return manifest


def _run_sweep(cfg: ExperimentConfig) -> dict:
    """Run the same scene for several frequency counts S.

    Each pass uses S wavelengths uniform over the configured band (the
    band midpoint when S = 1) and writes into a subdirectory; the summary
    manifest collects the off-target maxima for side-by-side comparison.
    """
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    lam = cfg.scene.wavelengths
    lam_first, lam_last = lam[0], lam[-1]
    entries = []
    for s_count in cfg.s_sweep:
        if s_count == 1:
            mid = 0.5 * (lam_first + lam_last)
            wavelengths = (mid,)
        else:
            wavelengths = tuple(uniform_wavelengths(lam_first, lam_last, s_count))
        sub_scene = Scene(
            scatterers=cfg.scene.scatterers, eps0=cfg.scene.eps0, mu0=cfg.scene.mu0,
            direction_count=cfg.scene.direction_count, wavelengths=wavelengths)
        sub_cfg = ExperimentConfig(
            scene=sub_scene, grid=cfg.grid, model=cfg.model, threshold=cfg.threshold,
            test_vector=cfg.test_vector, snr_db=cfg.snr_db, seed=cfg.seed,
            noise=cfg.noise, output_dir=str(out / f"s{s_count:02d}"),
            formats=cfg.formats, dump_msr=cfg.dump_msr,
            compare_theory=cfg.compare_theory, profile=False, s_sweep=(),
            coupling=cfg.coupling)
        manifest = run_experiment(sub_cfg)
        entries.append({
            "s": s_count,
            "directory": f"s{s_count:02d}",
            "offtarget_max": manifest["offtarget_max"],
            "peaks": manifest["peaks"],
        })
    summary = {
        "package": f"submig {__version__}",
        "backend": BACKEND,
        "config": config_to_dict(cfg),
        "sweep": entries,
    }
    with open(out / "manifest.json", "w", encoding="utf-8") as fh:
        json.dump(summary, fh, indent=2)
    return summary


def _run_theory(cfg: ExperimentConfig) -> dict:
    """Emit the analytic envelope maps only (no data generation)."""
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    scene = cfg.scene
    omegas = scene.omegas()
    outputs = []
    for s, w in enumerate(omegas):
        pred = predicted_single_map(cfg.grid, scene, w)
        for fmt in cfg.formats:
            path = out / f"theory_single_{s + 1:02d}.{fmt}"
            export_heatmap(pred, fmt, path)
            outputs.append(path.name)
    if len(omegas) > 1:
        pred_multi = predicted_multi_map(cfg.grid, scene, omegas[0], omegas[-1])
        for fmt in cfg.formats:
            path = out / f"theory_multi.{fmt}"
            export_heatmap(pred_multi, fmt, path)
            outputs.append(path.name)
    if cfg.profile:
        # radial envelope profiles around a scatterer (they are radially
        # symmetric, so a 1-D slice captures the full shape)
        half = 0.5 * cfg.grid.step * (cfg.grid.nx - 1)
        radii = np.arange(0.0, half + cfg.grid.step / 2, cfg.grid.step)
        from .specfun import bessel_j0, bessel_j1

        w_hi = omegas[-1]
        single = bessel_j0(w_hi * radii) ** 2
        if len(omegas) > 1:
            w_lo = omegas[0]
            hi = bessel_j0(w_hi * radii) ** 2 + bessel_j1(w_hi * radii) ** 2
            lo = bessel_j0(w_lo * radii) ** 2 + bessel_j1(w_lo * radii) ** 2
            multi = np.abs((w_hi * hi - w_lo * lo) / (w_hi - w_lo))
        else:
            multi = single
        path = out / "profile.csv"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("r,single,multi\n")
            for r, sv, mv in zip(radii, single, multi):
                fh.write(f"{r:.17g},{sv:.17g},{mv:.17g}\n")
        outputs.append(path.name)
    manifest = {
        "package": f"submig {__version__}",
        "backend": BACKEND,
        "config": config_to_dict(cfg),
        "outputs": outputs,
    }
    with open(out / "manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2)
    return manifest


def _resolve_config_arg(arg: str) -> str:
    """Accept a path or the name of a packaged preset (fig1, fig2a, ...)."""
    if os.path.exists(arg):
        return arg
    preset = importlib.resources.files("submig") / "presets" / f"{arg}.json"
    if preset.is_file():
        return str(preset)
    raise ConfigurationError(f"config {arg!r} is neither a file nor a known preset")


def _apply_overrides(cfg: ExperimentConfig, args) -> ExperimentConfig:
    if os.environ.get(ENV_OUTPUT_DIR):
        cfg.output_dir = os.environ[ENV_OUTPUT_DIR]
    if getattr(args, "output_dir", None):
        cfg.output_dir = args.output_dir
    if getattr(args, "seed", None) is not None:
        cfg.seed = args.seed
    if getattr(args, "no_noise", False):
        cfg.noise = False
        cfg.snr_db = float("inf")
    if getattr(args, "model", None):
        cfg.model = args.model
    return cfg


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="submig",
        description="Subspace-migration imaging workbench for small 2-D scatterers.")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a full imaging experiment")
    run_p.add_argument("config", help="JSON config path or preset name (fig1, fig2a, fig2b, fig3)")
    theory_p = sub.add_parser("theory", help="emit analytic envelope maps only")
    theory_p.add_argument("config", help="JSON config path or preset name")
    for p in (run_p, theory_p):
        p.add_argument("--seed", type=int, default=None, help="override the noise seed")
        p.add_argument("--output-dir", default=None, help="override the output directory")
        p.add_argument("--no-noise", action="store_true", help="disable noise injection")
        p.add_argument("--model", choices=_MODELS, default=None, help="override the forward model")

    cmp_p = sub.add_parser("compare", help="compare two heatmap CSV files")
    cmp_p.add_argument("map_a", help="computed map CSV")
    cmp_p.add_argument("map_b", help="reference map CSV")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "compare":
            report = compare_maps(read_heatmap_csv(args.map_a),
                                  read_heatmap_csv(args.map_b))
            print(report.to_json())
            return 0
        cfg = load_config(_resolve_config_arg(args.config))
        cfg = _apply_overrides(cfg, args)
        if args.command == "theory":
            manifest = _run_theory(cfg)
        else:
            manifest = run_experiment(cfg)
        n_out = len(manifest.get("outputs", [])) or sum(
            len(e.get("peaks", {}).get("points", [])) for e in manifest.get("sweep", []))
        print(f"wrote {cfg.output_dir} ({n_out} artifacts, backend={BACKEND})")
        return 0
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, UsageError, SolveError, np.linalg.LinAlgError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
