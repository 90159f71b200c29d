import math

import numpy as np
import pytest

from src.physics import Medium, MomentumTag, PreconditionError
from src.physics.scenarios import (
    DEFAULT_WGM_INDEX,
    DragConfig,
    MirrorConfig,
    SphereKickConfig,
    TorqueConfig,
    bec_recoil,
    displacement_ratio,
    fiber_exit_impulse,
    incident_momentum_flux,
    kick_correction_scale,
    metal_fields,
    mirror_pressure_divergence,
    mirror_pressure_flux,
    mirror_pressure_lorentz,
    momentum_flux_pressure,
    photon_drag_field,
    photon_momentum,
    reference_pressure_ratio,
    sphere_kick_trajectory,
    sphere_kick_trajectory_numeric,
    sphere_kick_vmax,
    total_displacement,
    wgm_torque,
    wgm_torque_volume_integral,
)

HENE_OMEGA = 2.976e15
BOTH_TAGS = (MomentumTag.ABRAHAM, MomentumTag.MINKOWSKI)


def mirror(n=1.33, E0=1e3, omega=HENE_OMEGA, sigma=5.96e7, **kwargs):
    return MirrorConfig(medium=Medium.from_index(n), E0=E0, omega=omega, conductivity=sigma, **kwargs)


def sphere(n=1.33, mu=8.9e-4, M=1.44e-10, delta_G=8.1e-12, H=5.9e-6, L0=300e-6):
    return SphereKickConfig(
        M=M,
        a=25e-6,
        delta_G=delta_G,
        pulse_energy=H,
        fluid=Medium.from_index(n, viscosity=mu),
        reference_fluid=Medium.from_index(1.0, viscosity=1.8e-5),
        L0=L0,
    )


class TestMirrorFlux:
    def test_hand_evaluation(self, constants):
        pressure = momentum_flux_pressure(1.33, 0.95, 1e4, constants)
        assert pressure == pytest.approx(1.33 / constants.c * 1.95 * 1e4, rel=1e-15)
        assert pressure == pytest.approx(8.645e-5, rel=1e-3)

    def test_reflectance_and_phase(self):
        cfg = mirror()
        result = mirror_pressure_flux(cfg)
        assert result.reflectance == pytest.approx(1.0 - 2.0 * cfg.k_over_alpha, rel=1e-15)
        assert math.tan(result.phase) == pytest.approx(-cfg.k_over_alpha, rel=1e-12)

    def test_perfect_conductor_limit(self, constants):
        cfg = mirror(sigma=1e16)
        assert mirror_pressure_flux(cfg).pressure == pytest.approx(2 * 1.33 * cfg.incident_flux / constants.c, rel=1e-5)

    def test_incident_flux(self, constants):
        cfg = mirror(n=1.5, E0=2e3)
        assert cfg.incident_flux == pytest.approx(1.5 * 2e3 ** 2 / (2 * constants.mu0 * constants.c), rel=1e-12)

    @pytest.mark.parametrize("n", [1.33, 1.50, 1.60])
    def test_pressure_ratio_to_air_is_index(self, n):
        assert abs(reference_pressure_ratio(mirror(n=n)) - n) <= 1e-12

    def test_pressure_increases_with_index(self):
        pressures = [momentum_flux_pressure(n, 0.95, 1e4) for n in np.linspace(1.0, 1.6, 13)]
        assert all(b > a for a, b in zip(pressures, pressures[1:]))

    def test_no_reflection_leaves_incident_flux(self, constants):
        assert momentum_flux_pressure(1.33, 0.0, 1e4, constants) == pytest.approx(1.33e4 / constants.c, rel=1e-15)

    def test_rejects_poor_conductor(self):
        with pytest.raises(PreconditionError) as excinfo:
            mirror_pressure_flux(mirror(sigma=1e5))
        assert excinfo.value.quantity == 'k/alpha'
        assert '0.2' in str(excinfo.value)

    def test_regime_guard_is_configurable(self):
        cfg = mirror(sigma=2e6, max_k_over_alpha=0.5)
        assert 0.2 < cfg.k_over_alpha < 0.5
        assert mirror_pressure_flux(cfg).pressure > 0

    @pytest.mark.parametrize("kwargs", [{'omega': 0.0}, {'sigma': 0.0}, {'E0': -1.0}])
    def test_rejects_invalid_config(self, kwargs):
        with pytest.raises(PreconditionError):
            mirror(**kwargs)


class TestMetalFields:
    def test_surface_electric_modulus(self):
        cfg = mirror()
        assert abs(metal_fields(cfg, 0.0).E_y) == pytest.approx(math.sqrt(2) * cfg.k * cfg.E0 / cfg.alpha, rel=1e-12)

    def test_fields_decay_inside_metal(self):
        cfg = mirror()
        surface = metal_fields(cfg, 0.0)
        deep = metal_fields(cfg, 40.0 / cfg.alpha)
        assert abs(deep.E_y) <= 1e-15 * abs(surface.E_y)
        assert abs(deep.H_z) <= 1e-15 * abs(surface.H_z)

    def test_surface_magnetic_field_in_perfect_conductor_limit(self, constants):
        cfg = mirror(sigma=1e16)
        expected = 2 * cfg.k * cfg.E0 / (constants.mu0 * cfg.omega)
        assert abs(metal_fields(cfg, 0.0).H_z) == pytest.approx(expected, rel=1e-5)

    def test_rejects_negative_depth(self):
        with pytest.raises(PreconditionError):
            metal_fields(mirror(), -1e-9)


class TestMirrorRoutes:
    @pytest.mark.parametrize("n,sigma,omega", [
        (1.0, 1e7, 2.7e15),
        (1.33, 5.96e7, HENE_OMEGA),
        (1.6, 1e8, 4.7e15),
        (1.45, 3.5e7, 3.5e15),
    ])
    def test_lorentz_route_matches_flux(self, n, sigma, omega):
        cfg = mirror(n=n, sigma=sigma, omega=omega)
        flux = mirror_pressure_flux(cfg).pressure
        assert mirror_pressure_lorentz(cfg, 1e-8) == pytest.approx(flux, rel=1e-6)

    def test_lorentz_route_in_perfect_conductor_limit(self, constants):
        cfg = mirror(sigma=1e16)
        assert mirror_pressure_lorentz(cfg) == pytest.approx(2 * 1.33 * cfg.incident_flux / constants.c, rel=1e-5)

    def test_lorentz_route_without_field(self):
        assert mirror_pressure_lorentz(mirror(E0=0.0)) == 0.0

    def test_lorentz_route_rejects_non_positive_tolerance(self):
        with pytest.raises(PreconditionError):
            mirror_pressure_lorentz(mirror(), 0.0)

    @pytest.mark.parametrize("n", [1.0, 1.33, 1.6])
    def test_divergence_route_matches_flux(self, n):
        cfg = mirror(n=n)
        assert mirror_pressure_divergence(cfg) == pytest.approx(mirror_pressure_flux(cfg).pressure, rel=1e-12)

    def test_incident_part_of_divergence_route(self, constants):
        cfg = mirror()
        assert incident_momentum_flux(cfg) == pytest.approx(1.33 * cfg.incident_flux / constants.c, rel=1e-12)


class TestPhotonMomentum:
    def test_drag_tags_coincide_in_vacuum(self):
        cfg = DragConfig(intensity=1e10, sigma_a=1e-20, omega=1.778e14, n=1.0)
        assert photon_drag_field(cfg, MomentumTag.MINKOWSKI) == pytest.approx(
            photon_drag_field(cfg, MomentumTag.ABRAHAM), rel=1e-15)

    @pytest.mark.parametrize("n", [1.5, 3.4, 4.0])
    def test_drag_tag_ratio_is_n_squared(self, n):
        cfg = DragConfig(intensity=1e10, sigma_a=1e-20, omega=1.778e14, n=n)
        ratio = photon_drag_field(cfg, MomentumTag.MINKOWSKI) / photon_drag_field(cfg, MomentumTag.ABRAHAM)
        assert ratio == pytest.approx(n * n, rel=1e-12)

    @pytest.mark.parametrize("n", [1.0, 1.33, 4.0])
    def test_minkowski_drag_scales_with_index(self, constants, n):
        cfg = DragConfig(intensity=3e9, sigma_a=2e-21, omega=2e14, n=n)
        field = photon_drag_field(cfg, MomentumTag.MINKOWSKI)
        assert field * constants.e_charge * constants.c / (cfg.intensity * cfg.sigma_a) == pytest.approx(n, rel=1e-12)

    def test_drag_rejects_non_positive_input(self):
        with pytest.raises(PreconditionError):
            DragConfig(intensity=0.0, sigma_a=1e-20, omega=1e14, n=1.5)

    def test_bec_vacuum_recoil(self, constants):
        omega = 2 * math.pi * constants.c / 780e-9
        assert bec_recoil(1.0, omega) == pytest.approx(8.50e-28, rel=1e-3)

    def test_bec_recoil_is_linear_in_index(self):
        omega = 2.415e15
        assert bec_recoil(1.0001, omega) == pytest.approx(1.0001 * bec_recoil(1.0, omega), rel=1e-15)
        assert bec_recoil(2.0, omega) == pytest.approx(2.0 * bec_recoil(1.0, omega), rel=1e-15)

    def test_photon_momentum_tags(self, constants):
        omega = 3e15
        vacuum = constants.hbar * omega / constants.c
        assert photon_momentum(1.5, omega, MomentumTag.MINKOWSKI) == pytest.approx(1.5 * vacuum, rel=1e-15)
        assert photon_momentum(1.5, omega, MomentumTag.ABRAHAM) == pytest.approx(vacuum / 1.5, rel=1e-15)

    def test_fiber_exit_impulse(self):
        assert fiber_exit_impulse(2.7e-3, 1.5) == pytest.approx(4.5e-12, rel=1e-2)

    def test_fiber_impulse_vanishes_for_unit_index(self):
        assert fiber_exit_impulse(2.7e-3, 1.0) == 0.0

    def test_fiber_impulse_is_linear_in_energy(self):
        assert fiber_exit_impulse(5.4e-3, 1.5) == pytest.approx(2 * fiber_exit_impulse(2.7e-3, 1.5), rel=1e-15)

    def test_fiber_rejects_negative_energy(self):
        with pytest.raises(PreconditionError):
            fiber_exit_impulse(-1.0, 1.5)


class TestWgmTorque:
    def test_amplitude_estimate(self):
        cfg = TorqueConfig(a=100e-6, P0=100.0, omega0=1000.0)
        assert cfg.n == DEFAULT_WGM_INDEX
        result = wgm_torque(cfg, 0.0)
        assert result.amplitude == pytest.approx(7.71e-20, rel=1e-3)
        assert 1e-20 < result.amplitude < 1e-19

    def test_vanishes_at_time_zero(self):
        assert wgm_torque(TorqueConfig(a=100e-6, P0=100.0, omega0=1000.0), 0.0).torque == 0.0

    def test_vanishes_in_unit_index_cylinder(self):
        cfg = TorqueConfig(a=100e-6, P0=100.0, omega0=1000.0, n=1.0)
        for t in (0.0, 1e-4, 7e-4):
            assert wgm_torque(cfg, t).torque == 0.0

    def test_minkowski_predicts_no_torque(self):
        cfg = TorqueConfig(a=100e-6, P0=100.0, omega0=1000.0)
        result = wgm_torque(cfg, 1.3e-3, MomentumTag.MINKOWSKI)
        assert result.torque == 0.0
        assert result.amplitude == 0.0

    def test_torque_follows_modulation(self):
        cfg = TorqueConfig(a=100e-6, P0=100.0, omega0=1000.0)
        t = math.pi / 2 / cfg.omega0
        result = wgm_torque(cfg, t)
        assert result.torque == pytest.approx(-result.amplitude, rel=1e-15)

    @pytest.mark.parametrize("t", [0.2e-3, 1.1e-3, 4.0e-3])
    def test_volume_integral_matches_closed_form(self, t):
        cfg = TorqueConfig(a=100e-6, P0=100.0, omega0=1000.0)
        closed = wgm_torque(cfg, t).torque
        assert wgm_torque_volume_integral(cfg, t) == pytest.approx(closed, rel=1e-6)

    def test_rejects_invalid_radius(self):
        with pytest.raises(PreconditionError):
            TorqueConfig(a=0.0, P0=1.0, omega0=1.0)


class TestSphereKick:
    def test_no_momentum_no_motion(self):
        cfg = sphere(delta_G=0.0, H=0.0)
        for tag in BOTH_TAGS:
            assert sphere_kick_vmax(cfg, tag) == 0.0

    def test_tags_coincide_in_unit_index_fluid(self, constants):
        cfg = sphere(n=1.0)
        expected = (cfg.delta_G + cfg.pulse_energy / constants.c) / cfg.M
        for tag in BOTH_TAGS:
            assert sphere_kick_vmax(cfg, tag) == pytest.approx(expected, rel=1e-15)

    def test_velocity_dominated_by_ablation(self):
        cfg = sphere(n=1.0, M=1e-10)
        assert sphere_kick_vmax(cfg, MomentumTag.MINKOWSKI) == pytest.approx(8.10e-2, rel=3e-3)

    def test_trajectory_boundaries(self):
        cfg = sphere()
        for tag in BOTH_TAGS:
            start = sphere_kick_trajectory(cfg, tag, 0.0)
            assert start.velocity == sphere_kick_vmax(cfg, tag)
            assert start.displacement == 0.0
            end = sphere_kick_trajectory(cfg, tag, 1.0)
            assert end.velocity == pytest.approx(0.0, abs=1e-300)
            assert end.displacement == pytest.approx(total_displacement(cfg, tag), rel=1e-15)

    def test_total_displacement_balances_drag(self):
        cfg = sphere()
        for tag in BOTH_TAGS:
            drag = 6 * math.pi * cfg.fluid.viscosity * cfg.a
            assert total_displacement(cfg, tag) * drag == pytest.approx(cfg.M * sphere_kick_vmax(cfg, tag), rel=1e-12)

    @pytest.mark.parametrize("t", [1e-6, 5e-5, 1e-3])
    def test_numeric_integration_matches_closed_form(self, t):
        cfg = sphere()
        for tag in BOTH_TAGS:
            closed = sphere_kick_trajectory(cfg, tag, t)
            numeric = sphere_kick_trajectory_numeric(cfg, tag, t)
            assert numeric.velocity == pytest.approx(closed.velocity, rel=1e-6)
            assert numeric.displacement == pytest.approx(closed.displacement, rel=1e-6)

    def test_rejects_negative_time(self):
        with pytest.raises(PreconditionError):
            sphere_kick_trajectory(sphere(), MomentumTag.MINKOWSKI, -1e-6)

    def test_correction_scale(self):
        assert kick_correction_scale(sphere()) == pytest.approx(7.7e-3, rel=1e-2)

    def test_unit_index_ratio_is_viscosity_ratio(self):
        cfg = sphere(n=1.0)
        for tag in BOTH_TAGS:
            assert displacement_ratio(cfg, tag) == pytest.approx(1.8e-5 / 8.9e-4, rel=1e-15)

    def test_correction_signs(self):
        cfg = sphere(n=1.33)
        baseline = 1.8e-5 / 8.9e-4
        assert displacement_ratio(cfg, MomentumTag.MINKOWSKI) > baseline
        assert displacement_ratio(cfg, MomentumTag.ABRAHAM) < baseline

    def test_tag_difference(self):
        n = 1.33
        cfg = sphere(n=n)
        difference = displacement_ratio(cfg, MomentumTag.MINKOWSKI) - displacement_ratio(cfg, MomentumTag.ABRAHAM)
        expected = (1.8e-5 / 8.9e-4) * kick_correction_scale(cfg) * (n - 1 / n)
        assert difference == pytest.approx(expected, rel=1e-12)

    def test_requires_fluid_viscosity(self):
        with pytest.raises(ValueError):
            SphereKickConfig(M=1e-10, a=25e-6, delta_G=0.0, pulse_energy=1e-6, fluid=Medium.from_index(1.33))
