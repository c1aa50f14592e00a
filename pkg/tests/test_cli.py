import json

import numpy as np
import pytest

from submig.cli import (
    config_to_dict,
    export_heatmap,
    load_config,
    main,
    run_experiment,
)
from submig.exceptions import ConfigurationError
from submig.migration import read_heatmap_csv


def _write_config(tmp_path, payload, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return path


MINIMAL = {
    "scene": {
        "scatterers": [
            {"location": [0.4, 0.0]},
            {"location": [-0.6, 0.3]},
            {"location": [0.1, -0.5]},
        ]
    }
}


def _small_config(tmp_path, **overrides):
    payload = {
        "scene": {"scatterers": [
            {"location": [0.4, 0.0]},
            {"location": [-0.6, 0.3]},
            {"location": [0.1, -0.5]},
        ]},
        "wavelengths": {"first": 0.5, "last": 0.3, "count": 3},
        "grid": {"x": [-1, 1], "y": [-1, 1], "step": 0.05},
        "output": {"directory": str(tmp_path / "out"), "formats": ["csv", "pgm"]},
    }
    payload.update(overrides)
    return _write_config(tmp_path, payload)


def test_defaults_materialize(tmp_path):
    cfg = load_config(_write_config(tmp_path, MINIMAL))
    scene = cfg.scene
    assert [s.radius for s in scene.scatterers] == [0.1] * 3
    assert scene.eps0 == 1.0 and scene.mu0 == 1.0
    assert scene.direction_count == 20
    assert len(scene.wavelengths) == 10
    assert scene.wavelengths[0] == 0.5 and scene.wavelengths[-1] == pytest.approx(0.3)
    assert cfg.model == "foldy-lax"
    assert cfg.threshold == 0.01
    assert cfg.test_vector == (5 + 0j, 1 + 0j, 1 + 0j)
    assert cfg.snr_db == 10.0 and cfg.seed == 0 and cfg.noise
    assert (cfg.grid.nx, cfg.grid.ny) == (201, 201)
    assert cfg.grid.step == 0.01


def test_unknown_key_rejected(tmp_path):
    bad = dict(MINIMAL)
    bad["typo_field"] = 1
    with pytest.raises(ConfigurationError, match="typo_field"):
        load_config(_write_config(tmp_path, bad))


def test_bad_wavelengths_named(tmp_path):
    bad = dict(MINIMAL)
    bad["wavelengths"] = {"first": -0.5, "last": 0.3, "count": 3}
    with pytest.raises(ConfigurationError, match="wavelengths"):
        load_config(_write_config(tmp_path, bad))


def test_parse_error_reports_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"scene": }')
    with pytest.raises(ConfigurationError, match="line 1"):
        load_config(path)


def test_grid_must_cover_scatterers(tmp_path):
    bad = {
        "scene": {"scatterers": [{"location": [3.0, 0.0]}]},
        "grid": {"x": [-1, 1], "y": [-1, 1], "step": 0.1},
    }
    with pytest.raises(ConfigurationError, match="cover"):
        load_config(_write_config(tmp_path, bad))


def test_complex_test_vector_form(tmp_path):
    payload = dict(MINIMAL)
    payload["test_vector"] = [[5, 0], [0, 1], [1, -1]]
    cfg = load_config(_write_config(tmp_path, payload))
    assert cfg.test_vector == (5 + 0j, 1j, 1 - 1j)


def test_noise_null_disables(tmp_path):
    payload = dict(MINIMAL)
    payload["noise"] = None
    cfg = load_config(_write_config(tmp_path, payload))
    assert not cfg.noise


def test_run_experiment_bundle(tmp_path):
    cfg = load_config(_small_config(tmp_path))
    manifest = run_experiment(cfg)
    out = tmp_path / "out"
    for s in (1, 2, 3):
        assert (out / f"single_{s:02d}.csv").exists()
        assert (out / f"single_{s:02d}.pgm").exists()
        assert (out / f"theory_single_{s:02d}.csv").exists()
    assert (out / "multi.csv").exists()
    assert (out / "theory_multi.csv").exists()
    assert (out / "compare_multi.json").exists()
    assert (out / "manifest.json").exists()
    assert manifest["backend"] in ("numba", "numpy")
    assert len(manifest["frequencies"]) == 3
    for entry in manifest["frequencies"]:
        assert entry["significant"] >= 1
        assert len(entry["singular_values"]) == 20
    assert manifest["peaks"]["complete"]
    assert set(manifest["timings"]) == {"generate", "noise", "decompose", "maps",
                                        "theory", "export"}
    # stage ordering is recorded; generation happens before decomposition
    assert manifest["timings"]["generate"] >= 0.0


def test_rerun_from_manifest_is_byte_identical(tmp_path):
    cfg = load_config(_small_config(tmp_path))
    manifest = run_experiment(cfg)
    replay = dict(manifest["config"])
    replay["output"] = {"directory": str(tmp_path / "out2"),
                        "formats": ["csv", "pgm"], "dump_msr": False}
    cfg2 = load_config(_write_config(tmp_path, replay, name="replay.json"))
    run_experiment(cfg2)
    for name in manifest["outputs"]:
        if not name.endswith((".csv", ".pgm")):
            continue
        a = (tmp_path / "out" / name).read_bytes()
        b = (tmp_path / "out2" / name).read_bytes()
        assert a == b, name


def test_dump_msr_roundtrip(tmp_path):
    cfg = load_config(_small_config(
        tmp_path,
        output={"directory": str(tmp_path / "out"), "formats": ["csv"], "dump_msr": True}))
    run_experiment(cfg)
    assert (tmp_path / "out" / "msr_01.csv").exists()


def test_main_run_and_compare(tmp_path, capsys):
    cfg_path = _small_config(tmp_path, noise=None)
    assert main(["run", str(cfg_path)]) == 0
    capsys.readouterr()
    code = main(["compare", str(tmp_path / "out" / "multi.csv"),
                 str(tmp_path / "out" / "theory_multi.csv")])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert set(report) == {"scale", "nrmse", "correlation", "peaks"}


def test_main_flag_overrides(tmp_path):
    cfg_path = _small_config(tmp_path)
    alt = tmp_path / "alt"
    assert main(["run", str(cfg_path), "--no-noise", "--model", "born",
                 "--output-dir", str(alt)]) == 0
    manifest = json.loads((alt / "manifest.json").read_text())
    assert manifest["model"] == "born"
    assert manifest["seed"] is None


def test_env_output_override(tmp_path, monkeypatch):
    cfg_path = _small_config(tmp_path, noise=None)
    env_dir = tmp_path / "from_env"
    monkeypatch.setenv("SUBMIG_OUTPUT_DIR", str(env_dir))
    assert main(["run", str(cfg_path)]) == 0
    assert (env_dir / "manifest.json").exists()


def test_exit_codes(tmp_path, capsys):
    assert main(["run", str(tmp_path / "missing.json")]) == 2
    bad = _write_config(tmp_path, {"scene": {"scatterers": []}})
    assert main(["run", str(bad)]) == 2
    # unwritable output directory -> I/O failure
    cfg_path = _small_config(tmp_path, output={
        "directory": "/proc/submig-cannot-write", "formats": ["csv"]})
    assert main(["run", str(cfg_path)]) == 4
    capsys.readouterr()


def test_preset_resolution(tmp_path, monkeypatch):
    # presets load by bare name; run the envelope-only command on one
    monkeypatch.setenv("SUBMIG_OUTPUT_DIR", str(tmp_path / "fig1"))
    assert main(["theory", "fig1"]) == 0
    out = tmp_path / "fig1"
    assert (out / "profile.csv").exists()
    assert (out / "theory_multi.csv").exists()
    profile = (out / "profile.csv").read_text().splitlines()
    assert profile[0] == "r,single,multi"
    first = profile[1].split(",")
    assert float(first[1]) == pytest.approx(1.0)  # J0^2 at r=0
    assert float(first[2]) == pytest.approx(1.0)


def test_unknown_preset_rejected():
    assert main(["run", "not-a-preset"]) == 2


def test_sweep_bundle(tmp_path):
    cfg = load_config(_small_config(tmp_path, s_sweep=[1, 2], noise=None))
    manifest = run_experiment(cfg)
    assert [e["s"] for e in manifest["sweep"]] == [1, 2]
    assert (tmp_path / "out" / "s01" / "multi.csv").exists()
    assert (tmp_path / "out" / "s02" / "multi.csv").exists()
    # S = 1 uses the band midpoint
    sub = json.loads((tmp_path / "out" / "s01" / "manifest.json").read_text())
    assert sub["frequencies"][0]["wavelength"] == pytest.approx(0.4)


def test_export_heatmap_rejects_unknown_format(tmp_path, scene3, grid_coarse):
    from submig import predicted_single_map

    hmap = predicted_single_map(grid_coarse, scene3, 2 * np.pi / 0.3)
    with pytest.raises(ConfigurationError):
        export_heatmap(hmap, "bmp", tmp_path / "x.bmp")


def test_config_roundtrip_through_dict(tmp_path):
    cfg = load_config(_small_config(tmp_path))
    resolved = config_to_dict(cfg)
    path = _write_config(tmp_path, resolved, name="resolved.json")
    cfg2 = load_config(path)
    assert config_to_dict(cfg2) == resolved
