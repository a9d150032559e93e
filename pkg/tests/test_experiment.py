"""Bench-parameter arithmetic for the proposed measurement."""

import math

import pytest

from vacpp import (
    DimerSpec,
    ExperimentParams,
    PROPOSAL_DEFAULTS,
    coherent_volume,
    concentration_from_n_mol,
    n_mol_from_concentration,
    photon_number,
    proposal_report,
    spectral_width_report,
)
from vacpp.constants import C_LIGHT, PLANCK_H


class TestPhotonNumber:
    def test_five_nanojoule_pulse(self):
        n = photon_number(5e-9, 775e-9)
        assert n == pytest.approx(1.9e10, rel=0.05)
        assert n == pytest.approx(1.9507e10, rel=1e-4)

    def test_linear_in_energy(self):
        assert photon_number(10e-9, 775e-9) == pytest.approx(
            2.0 * photon_number(5e-9, 775e-9), rel=1e-12
        )

    def test_single_photon_energy(self):
        energy = PLANCK_H * C_LIGHT / 775e-9
        assert photon_number(energy, 775e-9) == pytest.approx(1.0, rel=1e-12)


class TestCoherentVolume:
    def test_twenty_fs_coherence_length(self):
        _, length, _ = coherent_volume(70e-6, 20.0)
        assert length == pytest.approx(6e-6, rel=0.05)
        assert length == pytest.approx(5.996e-6, rel=1e-3)

    def test_spot_area(self):
        area, _, _ = coherent_volume(70e-6, 20.0)
        assert area == pytest.approx(3.848e-9, rel=1e-3)

    def test_area_quadratic_in_diameter(self):
        a1, _, _ = coherent_volume(70e-6, 20.0)
        a2, _, _ = coherent_volume(140e-6, 20.0)
        assert a2 == pytest.approx(4.0 * a1, rel=1e-12)


class TestConcentration:
    def test_paper_concentration_gives_paper_count(self):
        _, _, volume = coherent_volume(70e-6, 20.0)
        n = n_mol_from_concentration(1.4e-3, volume)
        assert n == pytest.approx(1.9e10, rel=0.05)

    def test_volume_dilution(self):
        _, _, volume = coherent_volume(70e-6, 20.0)
        n = 1e10
        assert concentration_from_n_mol(n, 2.0 * volume) == pytest.approx(
            0.5 * concentration_from_n_mol(n, volume), rel=1e-12
        )

    def test_zero_concentration(self):
        assert n_mol_from_concentration(0.0, 1e-14) == 0.0

    def test_round_trip(self):
        _, _, volume = coherent_volume(70e-6, 20.0)
        c = 1.4e-3
        back = concentration_from_n_mol(n_mol_from_concentration(c, volume), volume)
        assert back == pytest.approx(c, rel=1e-12)


class TestSpectralWidths:
    def test_twenty_fs_at_775nm(self):
        widths = spectral_width_report(20.0, 775e-9)
        assert widths["field_half_width_1e_nm"] == pytest.approx(15.94, rel=1e-3)
        assert widths["field_fwhm_nm"] == pytest.approx(37.54, rel=1e-3)
        assert widths["intensity_fwhm_nm"] == pytest.approx(26.55, rel=1e-3)
        # no standard convention reproduces the often-quoted ~44 nm
        assert all(abs(w - 44.0) > 2.0 for w in widths.values())

    def test_widths_halve_with_doubled_duration(self):
        short = spectral_width_report(20.0, 775e-9)
        long = spectral_width_report(40.0, 775e-9)
        for key in short:
            assert long[key] == pytest.approx(0.5 * short[key], rel=1e-12)


class TestProposalReport:
    def test_defaults_reproduce_headline_numbers(self):
        report = proposal_report()
        assert report["photons_per_pulse"] == pytest.approx(1.9e10, rel=0.05)
        assert report["n_mol_in_volume"] == pytest.approx(1.9e10, rel=0.05)
        assert report["coherence_length_m"] == pytest.approx(6e-6, rel=0.05)
        ratio = report["superradiance"]["amplitude_ratio_collinear"]
        assert 10.0 <= ratio <= 40.0
        assert report["superradiance"]["gamma_over_sigma"] == pytest.approx(20.0)
        # the two differ by exactly sqrt(pi) at N_mol == N_probe
        assert report["superradiance"]["gamma_over_sigma"] / ratio == pytest.approx(
            math.sqrt(math.pi)
            * report["photons_per_pulse"]
            / report["n_mol_in_volume"],
            rel=1e-9,
        )

    def test_dimer_adds_weighted_ratio(self):
        dimer = DimerSpec(2.434, 2.426, 0.003, 1e-29, 0.9e-29)
        report = proposal_report(PROPOSAL_DEFAULTS, dimer)
        assert "coupling_weighted_ratio_collinear" in report["superradiance"]
        assert report["dimer"]["splitting_rad_fs"] > 0

    def test_validation(self):
        with pytest.raises(ValueError):
            ExperimentParams(0.0, 775e-9, 70e-6, 20.0, 1.4e-3, 400.0)
