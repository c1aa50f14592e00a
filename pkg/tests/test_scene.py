import numpy as np
import pytest

from submig import (
    Scatterer,
    Scene,
    frequencies_from_wavelengths,
    make_grid,
    polarization_tensor,
    unit_directions,
)
from submig.exceptions import ConfigurationError, DomainError


def test_unit_directions_n4():
    d = unit_directions(4)
    expected = np.array([[0, 1], [-1, 0], [0, -1], [1, 0]], dtype=float)
    assert np.allclose(d, expected, atol=1e-15)


def test_unit_directions_n20_norms():
    d = unit_directions(20)
    assert d.shape == (20, 2)
    assert np.max(np.abs(np.hypot(d[:, 0], d[:, 1]) - 1.0)) <= 1e-15


def test_unit_directions_n1():
    assert np.allclose(unit_directions(1), [[1.0, 0.0]], atol=1e-15)


def test_unit_directions_zero_rejected():
    with pytest.raises(ConfigurationError):
        unit_directions(0)


@pytest.mark.parametrize("n", [3, 8, 20, 45])
def test_directions_rotationally_equispaced(n):
    d = unit_directions(n)
    dots = np.sum(d * np.roll(d, -1, axis=0), axis=1)
    assert np.max(np.abs(dots - np.cos(2 * np.pi / n))) <= 1e-13


def test_frequencies_examples():
    two = frequencies_from_wavelengths(0.5, 0.3, 2)
    assert np.allclose(two, [2 * np.pi / 0.5, 2 * np.pi / 0.3], rtol=1e-12)
    one = frequencies_from_wavelengths(0.4, 0.4, 1)
    assert np.allclose(one, [2 * np.pi / 0.4], rtol=1e-12)
    three = frequencies_from_wavelengths(0.5, 0.3, 3)
    assert np.allclose(three, 2 * np.pi / np.array([0.5, 0.4, 0.3]), rtol=1e-12)


def test_frequencies_strictly_increasing():
    om = frequencies_from_wavelengths(0.8, 0.2, 17)
    assert np.all(np.diff(om) > 0)


def test_frequencies_errors():
    with pytest.raises(ConfigurationError):
        frequencies_from_wavelengths(0.5, 0.3, 0)
    with pytest.raises(ConfigurationError):
        frequencies_from_wavelengths(-0.5, 0.3, 2)
    with pytest.raises(ConfigurationError):
        frequencies_from_wavelengths(0.5, 0.3, 1)  # single requires first == last


def test_polarization_tensor_examples():
    s = Scatterer(location=(0, 0), permeability=5.0)
    assert np.allclose(polarization_tensor(s, 1.0), (np.pi / 3) * np.eye(2), rtol=1e-14)
    s_match = Scatterer(location=(0, 0), permeability=1.0)
    assert np.allclose(polarization_tensor(s_match, 1.0), np.pi * np.eye(2), rtol=1e-14)
    s_big = Scatterer(location=(0, 0), permeability=1e12)
    assert np.linalg.norm(polarization_tensor(s_big, 1.0)) <= 1e-11


def test_polarization_tensor_degenerate():
    s = Scatterer(location=(0, 0), permeability=1.0)
    with pytest.raises(DomainError):
        polarization_tensor(s, -1.0)


def test_make_grid_standard():
    g = make_grid((-1, 1), (-1, 1), 0.01)
    assert (g.nx, g.ny) == (201, 201)
    assert g.xs()[0] == -1.0
    assert g.xs()[-1] == pytest.approx(1.0, abs=1e-12)
    assert g.points().shape == (201 * 201, 2)


def test_make_grid_endpoints_only():
    g = make_grid((-1, 1), (-1, 1), 2.0)
    assert (g.nx, g.ny) == (2, 2)


def test_make_grid_degenerate():
    with pytest.raises(ConfigurationError):
        make_grid((0, 0), (0, 0), 0.1)
    with pytest.raises(ConfigurationError):
        make_grid((-1, 1), (-1, 1), -0.5)


def test_grid_covers():
    g = make_grid((-1, 1), (-1, 1), 0.01)
    assert g.covers((0.4, 0.0))
    assert not g.covers((1.5, 0.0))


def test_scene_validation_errors():
    mk = lambda **kw: Scatterer(location=(0, 0), **kw)
    with pytest.raises(ConfigurationError):
        Scene(scatterers=())
    with pytest.raises(ConfigurationError):  # coincident locations
        Scene(scatterers=(mk(), mk()))
    with pytest.raises(ConfigurationError):  # permittivity at background level
        Scene(scatterers=(Scatterer(location=(0, 0), permittivity=1.0),))
    with pytest.raises(ConfigurationError):  # permeability at background level
        Scene(scatterers=(Scatterer(location=(0, 0), permeability=1.0),))
    with pytest.raises(ConfigurationError):  # needs more directions than scatterers
        Scene(scatterers=(mk(),), direction_count=1)
    with pytest.raises(ConfigurationError):  # non-monotone wavelengths
        Scene(scatterers=(mk(),), wavelengths=(0.5, 0.3, 0.4))


def test_scene_close_separation_warns():
    with pytest.warns(UserWarning, match="separated"):
        Scene(scatterers=(
            Scatterer(location=(0.0, 0.0), radius=0.1),
            Scatterer(location=(0.2, 0.0), radius=0.1),
        ))


def test_scene_omegas_ascending(scene3):
    om = scene3.omegas()
    assert np.all(np.diff(om) > 0)
    assert om[0] == pytest.approx(2 * np.pi / 0.5, rel=1e-12)
    assert om[-1] == pytest.approx(2 * np.pi / 0.3, rel=1e-12)
