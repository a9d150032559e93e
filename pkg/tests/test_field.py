"""Pulse discretization, field amplitudes and Fourier consistency."""

import math

import numpy as np
import pytest

from vacpp import (
    PulseSpec,
    VacuumParams,
    envelope_from_modes,
    gaussian_amplitudes,
    pulse_field_amplitude,
    temporal_envelope,
    vacuum_field_amplitude,
)
from vacpp.constants import wavelength_nm_to_angular_freq

PAPER_AREA = math.pi * (70e-6) ** 2 / 4.0


def paper_pulse(photons=1.95e10):
    return PulseSpec(
        omega_0=wavelength_nm_to_angular_freq(775.0),
        sigma=20.0,
        photon_number=photons,
        area=PAPER_AREA,
    )


def test_zero_photons_zero_amplitudes():
    amps = gaussian_amplitudes(paper_pulse(photons=0.0))
    assert np.all(amps.amplitudes == 0.0)


def test_peak_amplitude_value():
    pulse = paper_pulse()
    # odd mode count puts the center frequency on the grid
    amps = gaussian_amplitudes(pulse, grid_span=5.0, modes=513)
    peak = math.sqrt(pulse.photon_number / (math.sqrt(math.pi) * pulse.bandwidth))
    center = np.argmin(np.abs(amps.mode_freqs - pulse.omega_0))
    assert abs(amps.amplitudes[center]) == pytest.approx(peak, rel=1e-12)
    assert np.max(np.abs(amps.amplitudes)) == pytest.approx(peak, rel=1e-12)


def test_photon_number_conserved_by_grid():
    pulse = paper_pulse()
    amps = gaussian_amplitudes(pulse, grid_span=5.0, modes=512)
    assert amps.photon_number == pytest.approx(pulse.photon_number, rel=1e-6)


@pytest.mark.parametrize("span,modes", [(2.9, 512), (5.0, 15)])
def test_bad_grids_rejected(span, modes):
    with pytest.raises(ValueError):
        gaussian_amplitudes(paper_pulse(), grid_span=span, modes=modes)


def test_amplitude_scales_as_sqrt_photons_and_duration():
    pulse = paper_pulse()
    base = pulse_field_amplitude(pulse)
    doubled_n = PulseSpec(pulse.omega_0, pulse.sigma, 2.0 * pulse.photon_number, area=pulse.area)
    doubled_sigma = PulseSpec(pulse.omega_0, 2.0 * pulse.sigma, pulse.photon_number, area=pulse.area)
    assert pulse_field_amplitude(doubled_n) == pytest.approx(math.sqrt(2.0) * base, rel=1e-12)
    assert pulse_field_amplitude(doubled_sigma) == pytest.approx(math.sqrt(2.0) * base, rel=1e-12)
    assert pulse_field_amplitude(paper_pulse(photons=0.0)) == 0.0


def test_amplitude_regression_against_direct_si_arithmetic():
    # frozen from h*f*N*sqrt(pi)*sigma/(eps0*c*A) evaluated per photon energy
    assert pulse_field_amplitude(paper_pulse()) == pytest.approx(
        4.164660362720694e-06, rel=1e-9
    )


def test_vacuum_amplitude_scalings():
    pulse = paper_pulse(photons=1.9e10)
    base = vacuum_field_amplitude(pulse.omega_0, 400.0, pulse.area)
    assert vacuum_field_amplitude(pulse.omega_0, 1600.0, pulse.area) == pytest.approx(
        2.0 * base, rel=1e-12
    )
    # definitional cancellation: one probe photon, gamma = sqrt(pi) sigma
    unit = PulseSpec(pulse.omega_0, 20.0, 1.0, area=pulse.area)
    ratio = vacuum_field_amplitude(
        pulse.omega_0, math.sqrt(math.pi) * 20.0, pulse.area
    ) / pulse_field_amplitude(unit)
    assert ratio**2 == pytest.approx(1.0, rel=1e-12)


def test_vacuum_to_classical_ratio_paper_scale():
    pulse = paper_pulse(photons=1.9e10)
    ratio_sq = (
        vacuum_field_amplitude(pulse.omega_0, 400.0, pulse.area)
        / pulse_field_amplitude(pulse)
    ) ** 2
    assert ratio_sq == pytest.approx(400.0 / (1.9e10 * math.sqrt(math.pi) * 20.0), rel=1e-12)
    assert ratio_sq == pytest.approx(5.94e-10, rel=0.01)


def test_vacuum_params_validation():
    with pytest.raises(ValueError):
        VacuumParams.for_probe(0.0, paper_pulse())


def test_envelope_peak_and_width():
    pulse = PulseSpec(2.43, 20.0, 1.9e10, arrival_time=37.0)
    peak = pulse_field_amplitude(pulse) / (math.sqrt(2.0 * math.pi) * pulse.sigma)
    assert abs(temporal_envelope(pulse, 37.0)) == pytest.approx(peak, rel=1e-12)
    assert abs(temporal_envelope(pulse, 37.0 + pulse.sigma)) / peak == pytest.approx(
        math.exp(-0.5), rel=1e-12
    )


def test_envelope_matches_mode_synthesis():
    pulse = PulseSpec(2.43, 20.0, 1.9e10, arrival_time=10.0)
    amps = gaussian_amplitudes(pulse, grid_span=5.0, modes=512)
    t = np.linspace(pulse.arrival_time - 4 * pulse.sigma, pulse.arrival_time + 4 * pulse.sigma, 241)
    closed = temporal_envelope(pulse, t)
    synth = envelope_from_modes(pulse, amps, t)
    deviation = np.max(np.abs(closed - synth)) / np.max(np.abs(closed))
    assert deviation < 1e-4


def test_direction_normalized():
    pulse = PulseSpec(2.43, 20.0, 1.0, direction=(0.0, 0.0, 5.0))
    assert pulse.direction == (0.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        PulseSpec(2.43, 20.0, 1.0, direction=(0.0, 0.0, 0.0))
