"""Brute-force integrator: identities, convergence policy, analytic agreement."""

import math

import numpy as np
import pytest

from vacpp import (
    DimerSpec,
    PulseSpec,
    QuadratureConfig,
    VacuumParams,
    compare_signals,
    compute_couplings,
    diagonalize_dimer,
    esa_by_quadrature,
    gsb_by_quadrature,
    oracle_signals,
    regularized_phase_integral,
    se_by_quadrature,
    single_molecule_signal,
)
from vacpp.errors import ConfigError, ConvergenceError, PulseOverlapError
from vacpp.quadrature import OracleSignals, QuadratureValue


def make_system(**kwargs):
    defaults = dict(
        omega_a=2.47, omega_b=2.39, coupling=0.025, mu_ag=1.0e-29, mu_bg=0.8e-29
    )
    defaults.update(kwargs)
    basis = diagonalize_dimer(
        DimerSpec(
            defaults["omega_a"],
            defaults["omega_b"],
            defaults["coupling"],
            defaults["mu_ag"],
            defaults["mu_bg"],
        )
    )
    pump = PulseSpec(omega_0=2.43, sigma=20.0, photon_number=1.9e10)
    probe = PulseSpec(omega_0=2.43, sigma=20.0, photon_number=1.9e10)
    vac = VacuumParams.for_probe(400.0, probe)
    return basis, pump, probe, vac


CFG = QuadratureConfig(regularization_gamma=400.0)


class TestRegularizedPhaseIntegral:
    def test_lorentzian_identity(self):
        gamma = 400.0
        for delta in (0.0, 1.0 / gamma, 10.0 / gamma):
            expected = (2.0 / gamma) / ((1.0 / gamma) ** 2 + delta**2)
            assert regularized_phase_integral(delta, gamma) == pytest.approx(
                expected, rel=1e-6
            )

    def test_zero_detuning_peak(self):
        assert regularized_phase_integral(0.0, 123.0) == pytest.approx(2.0 * 123.0, rel=1e-9)


class TestEsa:
    def test_all_dark_is_zero(self):
        basis, pump, probe, vac = make_system(mu_ag=0.0, mu_bg=0.0)
        assert esa_by_quadrature(basis, pump, probe, CFG, 300.0).value == 0.0

    def test_single_bright_pathway_matches_coupling_product(self):
        basis, pump, probe, vac = make_system(
            omega_a=2.43, omega_b=2.43, coupling=0.02, mu_ag=1e-29, mu_bg=1e-29
        )
        # symmetric dimer: lower exciton dark, single alpha pathway
        c = compute_couplings(basis, pump, probe, vac)
        expected = abs(c.probe.fa * c.pump.ag) ** 2
        value = esa_by_quadrature(basis, pump, probe, CFG, 400.0).value
        assert value == pytest.approx(expected, rel=1e-3)

    def test_beat_period_from_two_point_phase_fit(self):
        basis, pump, probe, vac = make_system()
        period = 2.0 * math.pi / basis.splitting
        t0 = 400.0
        quarter = period / 4.0
        v0 = esa_by_quadrature(basis, pump, probe, CFG, t0).value
        v1 = esa_by_quadrature(basis, pump, probe, CFG, t0 + quarter).value
        v2 = esa_by_quadrature(basis, pump, probe, CFG, t0 + period).value
        # one full period restores the signal; a quarter period does not
        assert v2 == pytest.approx(v0, rel=1e-6)
        assert abs(v1 - v0) > 1e-3 * abs(v0)


class TestSe:
    def test_gamma_mismatch_rejected(self):
        basis, pump, probe, vac = make_system()
        bad = QuadratureConfig(regularization_gamma=500.0)
        with pytest.raises(ConfigError):
            se_by_quadrature(basis, pump, probe, vac, bad, 300.0)

    def test_routes_agree_and_match_analytic(self):
        basis, pump, probe, vac = make_system()
        classical, vac_mode, vac_delta, gap = se_by_quadrature(
            basis, pump, probe, vac, CFG, 300.0
        )
        analytic = single_molecule_signal(basis, pump, probe, vac, 300.0)
        assert classical.value == pytest.approx(analytic.se_classical, rel=1e-3)
        assert vac_mode.value == pytest.approx(analytic.se_vacuum, rel=0.10)
        assert vac_delta.value == pytest.approx(analytic.se_vacuum, rel=0.01)
        assert gap <= 0.01

    def test_degenerate_quasi_interference_within_ten_percent(self):
        # quasidegenerate excitons: window approximation vs true Lorentzian
        gamma = 400.0
        splitting = 0.3 / gamma  # inside the window, finite Lorentzian droop
        basis, pump, probe, _ = make_system(
            omega_a=2.43 + splitting / 2.0,
            omega_b=2.43 - splitting / 2.0,
            coupling=0.0,
            mu_ag=1e-29,
            mu_bg=1e-29,
        )
        vac = VacuumParams.for_probe(gamma, probe)
        analytic = single_molecule_signal(basis, pump, probe, vac, 300.0)
        _, vac_mode, _, _ = se_by_quadrature(basis, pump, probe, vac, CFG, 300.0)
        rel = abs(vac_mode.value - analytic.se_vacuum) / abs(analytic.se_vacuum)
        assert rel <= 0.10
        assert rel > 1e-3  # the window-vs-Lorentzian gap is genuinely finite here


class TestGsb:
    def test_no_pump_photons_is_zero(self):
        basis, _, probe, vac = make_system()
        pump = PulseSpec(omega_0=2.43, sigma=20.0, photon_number=0.0)
        assert gsb_by_quadrature(basis, pump, probe, CFG, 300.0).value == 0.0

    def test_matches_population_product(self):
        basis, pump, probe, vac = make_system()
        c = compute_couplings(basis, pump, probe, vac)
        expected = -(abs(c.pump.ag) ** 2 + abs(c.pump.bg) ** 2) * (
            abs(c.probe.ag) ** 2 + abs(c.probe.bg) ** 2
        )
        assert gsb_by_quadrature(basis, pump, probe, CFG, 300.0).value == pytest.approx(
            expected, rel=1e-3
        )

    def test_ordered_integral_is_half_of_full_rectangle(self):
        # Hermitian-symmetric integrand: the full double integral equals twice
        # the real part of the time-ordered one
        sigma, detuning = 20.0, 0.05
        n = 801
        u = np.linspace(-6 * sigma, 6 * sigma, n)
        w = np.full(n, u[1] - u[0])
        w[0] *= 0.5
        w[-1] *= 0.5
        env = np.exp(-(u**2) / (2 * sigma**2))
        f = w * env * np.exp(1j * detuning * u)  # later-time factor
        g = np.conj(f)  # earlier-time factor
        full = np.sum(np.outer(g, f))
        triangle = np.triu(np.ones((n, n)), k=1) + 0.5 * np.eye(n)
        ordered = np.sum(np.outer(g, f) * triangle)
        assert full.real == pytest.approx(2.0 * ordered.real, rel=1e-12)
        assert abs(full.imag) < 1e-9 * abs(full.real)


class TestConvergencePolicy:
    def test_coarse_grid_raises_with_both_values(self):
        # five-bandwidth detunings oscillate too fast for a 16-point grid
        basis, pump, probe, vac = make_system(
            omega_a=2.43 + 0.25, omega_b=2.43 - 0.25, coupling=0.01
        )
        coarse = QuadratureConfig(time_points=16, regularization_gamma=400.0)
        with pytest.raises(ConvergenceError) as err:
            esa_by_quadrature(basis, pump, probe, coarse, 300.0)
        assert err.value.coarse != err.value.fine

    def test_quadrature_config_validation(self):
        with pytest.raises(ValueError):
            QuadratureConfig(time_points=8)
        with pytest.raises(ValueError):
            QuadratureConfig(time_span=2.0)
        with pytest.raises(ValueError):
            QuadratureConfig(regularization_gamma=-1.0)
        assert not QuadratureConfig(time_points=32).meets_recommended_resolution
        assert QuadratureConfig().meets_recommended_resolution

    def test_overlap_rejected(self):
        basis, pump, probe, vac = make_system()
        with pytest.raises(PulseOverlapError):
            esa_by_quadrature(basis, pump, probe, CFG, 90.0)


class TestCompareReport:
    def test_identical_inputs_zero_deviation(self):
        basis, pump, probe, vac = make_system()
        analytic = single_molecule_signal(basis, pump, probe, vac, 300.0)

        def exact(x):
            return QuadratureValue(value=x, coarse_value=x, drift=0.0)

        fake = OracleSignals(
            t_wait=300.0,
            esa=exact(analytic.esa),
            se_classical=exact(analytic.se_classical),
            se_vacuum_mode_sum=exact(analytic.se_vacuum),
            se_vacuum_delta_shortcut=exact(analytic.se_vacuum),
            vacuum_route_gap=0.0,
            gsb=exact(analytic.gsb),
        )
        report = compare_signals(analytic, fake, CFG)
        assert report["passed"]
        assert all(c["rel_deviation"] == 0.0 for c in report["components"])

    def test_full_comparison_passes_at_default_resolution(self):
        basis, pump, probe, vac = make_system()
        analytic = single_molecule_signal(basis, pump, probe, vac, 350.0)
        oracle = oracle_signals(basis, pump, probe, vac, CFG, 350.0)
        report = compare_signals(analytic, oracle, CFG)
        assert report["passed"]
        classical = {c["component"]: c["rel_deviation"] for c in report["components"]}
        assert classical["esa"] <= 1e-3
        assert classical["se_classical"] <= 1e-3
        assert classical["gsb"] <= 1e-3
        assert classical["se_vacuum"] <= 0.10
        assert report["vacuum_route_gap"] <= 0.01
        for c in report["components"]:
            assert c["converged"]

    def test_report_is_json_serializable(self):
        import json

        basis, pump, probe, vac = make_system()
        analytic = single_molecule_signal(basis, pump, probe, vac, 300.0)
        oracle = oracle_signals(basis, pump, probe, vac, CFG, 300.0)
        json.dumps(compare_signals(analytic, oracle, CFG))
