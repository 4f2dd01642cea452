import cmath
import math

import pytest

import minnaert as mn


@pytest.fixture(scope="module")
def medium():
    return mn.nondimensionalize(mn.PhysicalMedium())


def test_wave_speeds_sum_to_one(medium):
    assert medium.c_s + medium.c_p == pytest.approx(1.0, abs=1e-14)


def test_helmholtz_static_limits():
    for n in range(5):
        s = mn.helmholtz_spectrum(n, 1e-7)
        assert s["xi"].real == pytest.approx(-1.0 / (2 * n + 1), abs=1e-10)
        expected = 0.5 if n == 0 else 1.0 / (2 * (2 * n + 1))
        assert s["zeta"].real == pytest.approx(expected, abs=1e-10)


def test_bessel_matches_closed_form():
    z = 0.7 + 0.2j
    assert abs(mn.sph_bessel_j(0, z) - cmath.sin(z) / z) < 1e-14


def test_resonance_closed_form(medium):
    w = mn.first_order_resonance(medium, 1e-2)
    assert abs(w - 1j * mn.omega0_imag(medium)) < 1e-10
    assert mn.resonance_radius(medium) == pytest.approx(abs(mn.omega0_imag(medium)) + 1.0)


def test_pulse_transform_hermitian():
    f = mn.pulse_ft(2.0)
    assert abs(mn.pulse_ft(-2.0) - f.conjugate()) < 1e-15


def test_field_and_residue(medium):
    scene = mn.ScatterScene()
    x = [0.0, 0.05, 0.0]
    u = mn.scattered_field(scene, medium, 1.0, x)
    assert len(u) == 3 and all(math.isfinite(abs(c)) for c in u)
    t_minus, t_plus = mn.time_windows(scene, medium, x)
    assert t_minus < t_plus
    res = mn.residue_approximation(scene, medium, x, t_plus + 1.0)
    assert abs(res[1]) > 0.0
    with pytest.raises(Exception):
        mn.residue_approximation(scene, medium, x, t_plus - 1.0)


def test_invalid_scene_raises(medium):
    scene = mn.ScatterScene()
    scene.epsilon = -1.0
    with pytest.raises(ValueError):
        mn.scattered_field(scene, medium, 1.0, [0.0, 0.05, 0.0])
