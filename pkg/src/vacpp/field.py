"""Gaussian laser pulses as multimode coherent states.

A transform-limited Gaussian pulse of duration sigma (fs) and bandwidth
B = 1/sigma (rad/fs) is represented by per-mode coherent amplitudes on a
uniform frequency grid,

    alpha(omega) = sqrt(N / (sqrt(pi) B)) * exp(-(omega - omega_0)^2 / (2 B^2)),

normalized so that the quadrature of |alpha|^2 over the grid returns the
photon number N.  The matching temporal field is

    eps(t) = amp / (sqrt(2 pi) sigma) * exp(-(t - t_j)^2 / (2 sigma^2))
             * exp(-i omega_0 (t - t_j)),

where amp = sqrt(hbar omega_0 N sqrt(pi) sigma / (epsilon_0 c A)) is the
pulse field amplitude (V*s/m).  The square root of the mode frequency is
approximated by sqrt(omega_0) throughout (narrowband pulses); this is a
fixed modeling choice, not an option.

The vacuum counterpart sqrt(hbar omega_0 Gamma / (epsilon_0 c A)) plays the
same role for the commutator-born part of the stimulated-emission signal,
with the coherence lifetime Gamma standing in for sqrt(pi) * sigma.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import C_LIGHT, EPSILON_0, HBAR

# pi * (70 um)^2 / 4, a typical laser spot
DEFAULT_AREA = math.pi * (70e-6) ** 2 / 4.0


def _unit(vec) -> tuple[float, float, float]:
    v = np.asarray(vec, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"direction must be a 3-vector, got shape {v.shape}")
    n = float(np.linalg.norm(v))
    if n == 0.0:
        raise ValueError("direction must be non-zero")
    return tuple(v / n)


@dataclass(frozen=True)
class PulseSpec:
    """One Gaussian pulse.

    Attributes:
        omega_0: central angular frequency (rad/fs).
        sigma: pulse duration (fs), > 0.  Bandwidth is 1/sigma.
        photon_number: mean photon number, >= 0.
        arrival_time: pulse center (fs).
        direction: propagation unit vector (normalized on construction).
        area: transverse beam area (m^2).
    """

    omega_0: float
    sigma: float
    photon_number: float
    arrival_time: float = 0.0
    direction: tuple[float, float, float] = (0.0, 0.0, 1.0)
    area: float = DEFAULT_AREA

    def __post_init__(self):
        if self.omega_0 <= 0:
            raise ValueError(f"omega_0 must be positive, got {self.omega_0}")
        if self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if self.photon_number < 0:
            raise ValueError(f"photon_number must be >= 0, got {self.photon_number}")
        if self.area <= 0:
            raise ValueError(f"area must be positive, got {self.area}")
        object.__setattr__(self, "direction", _unit(self.direction))

    @property
    def bandwidth(self) -> float:
        """Spectral bandwidth 1/sigma (rad/fs)."""
        return 1.0 / self.sigma

    def wavevector(self) -> np.ndarray:
        """Wavevector in rad/m, magnitude 2 pi / lambda."""
        k_mag = self.omega_0 * 1e15 / C_LIGHT
        return k_mag * np.asarray(self.direction)


@dataclass(frozen=True)
class CoherentAmplitudes:
    """Coherent-state amplitudes of one pulse on a uniform frequency grid."""

    mode_freqs: np.ndarray  # rad/fs, ascending uniform grid
    amplitudes: np.ndarray  # complex, per mode
    mode_spacing: float  # rad/fs

    def __post_init__(self):
        object.__setattr__(self, "mode_freqs", np.asarray(self.mode_freqs, dtype=float))
        object.__setattr__(self, "amplitudes", np.asarray(self.amplitudes, dtype=complex))
        if self.mode_freqs.shape != self.amplitudes.shape:
            raise ValueError("mode_freqs and amplitudes must have equal shapes")
        self.mode_freqs.setflags(write=False)
        self.amplitudes.setflags(write=False)

    @property
    def photon_number(self) -> float:
        """Quadrature of |alpha|^2 over the grid."""
        return float(np.sum(np.abs(self.amplitudes) ** 2) * self.mode_spacing)

    def __len__(self) -> int:
        return self.mode_freqs.size


@dataclass(frozen=True)
class VacuumParams:
    """Coherence lifetime and the vacuum single-photon field amplitude."""

    gamma: float  # fs
    eta_vac: float  # V*s/m

    def __post_init__(self):
        if self.gamma <= 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")

    @classmethod
    def for_probe(cls, gamma: float, probe: PulseSpec) -> "VacuumParams":
        """Vacuum parameters matched to a given probe pulse."""
        return cls(gamma=gamma, eta_vac=vacuum_field_amplitude(probe.omega_0, gamma, probe.area))


def gaussian_amplitudes(pulse: PulseSpec, grid_span: float = 5.0, modes: int = 512) -> CoherentAmplitudes:
    """Discretize a pulse into coherent amplitudes on a uniform grid.

    The grid spans omega_0 +/- grid_span * bandwidth with `modes` points.

    Raises:
        ValueError: if grid_span < 3 (the truncated Gaussian would no longer
            integrate to the photon number within tolerance) or modes < 16.
    """
    if grid_span < 3:
        raise ValueError(
            f"grid_span must be >= 3 bandwidths to conserve photon number, got {grid_span}"
        )
    if modes < 16:
        raise ValueError(f"modes must be >= 16, got {modes}")
    b = pulse.bandwidth
    freqs = np.linspace(pulse.omega_0 - grid_span * b, pulse.omega_0 + grid_span * b, modes)
    spacing = float(freqs[1] - freqs[0])
    peak = math.sqrt(pulse.photon_number / (math.sqrt(math.pi) * b))
    amps = peak * np.exp(-((freqs - pulse.omega_0) ** 2) / (2.0 * b * b))
    return CoherentAmplitudes(mode_freqs=freqs, amplitudes=amps.astype(complex), mode_spacing=spacing)


def pulse_field_amplitude(pulse: PulseSpec) -> float:
    """Field amplitude sqrt(hbar omega_0 N sqrt(pi) sigma / (eps0 c A)) in V*s/m.

    omega_0 * sigma is unit-invariant (rad/fs * fs), so no explicit fs -> s
    conversion is needed.
    """
    return math.sqrt(
        HBAR
        * pulse.omega_0
        * pulse.photon_number
        * math.sqrt(math.pi)
        * pulse.sigma
        / (EPSILON_0 * C_LIGHT * pulse.area)
    )


def vacuum_field_amplitude(omega_0: float, gamma: float, area: float) -> float:
    """Vacuum single-photon amplitude sqrt(hbar omega_0 Gamma / (eps0 c A)) in V*s/m.

    Args:
        omega_0: probe central frequency (rad/fs).
        gamma: coherence lifetime (fs), > 0.
        area: beam area (m^2).
    """
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    return math.sqrt(HBAR * omega_0 * gamma / (EPSILON_0 * C_LIGHT * area))


def temporal_envelope(pulse: PulseSpec, t) -> np.ndarray:
    """Complex field of the pulse at times t (fs), in (V*s/m)/fs.

    Gaussian envelope peaking at the arrival time, times the carrier
    exp(-i omega_0 (t - t_j)).
    """
    t = np.asarray(t, dtype=float)
    amp = pulse_field_amplitude(pulse)
    u = t - pulse.arrival_time
    env = amp / (math.sqrt(2.0 * math.pi) * pulse.sigma) * np.exp(-(u * u) / (2.0 * pulse.sigma**2))
    return env * np.exp(-1j * pulse.omega_0 * u)


def envelope_from_modes(pulse: PulseSpec, amps: CoherentAmplitudes, t) -> np.ndarray:
    """Synthesize the temporal field from the discrete mode amplitudes.

    Evaluates sqrt(hbar omega_0 / (4 pi eps0 c A)) * sum_k dω alpha_k
    exp(-i omega_k (t - t_j)), the mode-sum counterpart of
    `temporal_envelope` under the same narrowband convention.  Used to check
    Fourier consistency of the discretization.
    """
    t = np.asarray(t, dtype=float)
    prefac = math.sqrt(HBAR * pulse.omega_0 / (4.0 * math.pi * EPSILON_0 * C_LIGHT * pulse.area))
    u = t - pulse.arrival_time
    phases = np.exp(-1j * np.outer(u, amps.mode_freqs))
    return prefac * amps.mode_spacing * phases @ amps.amplitudes
