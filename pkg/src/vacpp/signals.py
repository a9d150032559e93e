"""Closed-form pump-probe signals of a dimer, single molecule and ensemble.

Frequency-integrated pump-probe signal at waiting time T, decomposed into
excited-state absorption (ESA, >= 0), stimulated emission (SE, <= 0) and
ground-state bleach (GSB, <= 0).  SE splits further into the classical part,
proportional to the product of pump and probe photon numbers, and the
commutator-born vacuum part, which carries the vacuum field amplitude
instead of the probe amplitude, is independent of T and of the probe photon
number, and scales linearly with the pump photon number.

Each light-matter coupling is the dimensionless

    (mu / hbar) * amp_j * exp(-sigma_j^2 (omega_transition - omega_j)^2 / 2)

for transition dipole mu, pulse field amplitude amp_j and detuning of the
transition from the pulse center.  Vacuum couplings (mu / hbar) * amp_vac
carry no spectral factor: the probe enters the vacuum term only through the
equal-time contraction of its mode operators, so only the pump envelope
filters the transition.

The many-molecule signal is computed two independent ways: per-process sums
over molecule pairs (the primary decomposition returned to callers) and the
algebraically collapsed total, in which every |X|^2 contribution of the
classical parts cancels between ESA, SE and GSB, leaving N_mol scaling --
except for the vacuum term, which keeps the phase-matching factor |X|^2 and
hence turns superradiant (N_mol^2) in collinear geometry.
"""

import cmath
import math
from dataclasses import dataclass

from .constants import HBAR
from .dimer import ExcitonBasis
from .errors import PulseOverlapError, UnsupportedRegimeError
from .field import PulseSpec, VacuumParams, pulse_field_amplitude

# Non-overlap safety factor: envelope overlap below e^-9 for T > 3(sigma_P + sigma_P').
OVERLAP_FACTOR = 3.0


@dataclass(frozen=True)
class TransitionCouplings:
    """Dimensionless couplings of one pulse to the four upward transitions."""

    ag: complex  # g -> alpha
    bg: complex  # g -> beta
    fa: complex  # alpha -> f
    fb: complex  # beta -> f


@dataclass(frozen=True)
class CouplingSet:
    """Everything the closed-form signals need besides energies and T.

    Upward couplings are stored; the downward (emission) coupling of the
    conjugate pulse is their complex conjugate.
    """

    pump: TransitionCouplings
    probe: TransitionCouplings
    vac_ag: complex  # g -> alpha driven by probe vacuum
    vac_bg: complex
    delta_window: int  # 1 iff the excitons are quasidegenerate on the lifetime scale
    min_waiting_time: float  # fs, below which the pulses overlap

    def __post_init__(self):
        if self.delta_window not in (0, 1):
            raise ValueError(f"delta_window must be 0 or 1, got {self.delta_window}")


@dataclass(frozen=True)
class SignalComponents:
    """Decomposed pump-probe signal at one waiting time (dimensionless)."""

    t_wait: float  # fs
    esa: float
    se_classical: float
    se_vacuum: float
    gsb: float

    @property
    def total(self) -> float:
        return self.esa + self.se_classical + self.se_vacuum + self.gsb


def interference_window(omega_alpha: float, omega_beta: float, gamma: float) -> int:
    """1 iff |omega_alpha - omega_beta| <= pi / (2 Gamma), else 0.

    Discrete stand-in for the Lorentzian lifetime broadening of width 1/Gamma:
    the window height 2*Gamma and half-width pi/(2*Gamma) preserve the
    Lorentzian's area.  Quasidegenerate emission pathways within the window
    interfere through the vacuum; others do not.
    """
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    return 1 if abs(omega_alpha - omega_beta) <= math.pi / (2.0 * gamma) else 0


def _spectral_factor(sigma: float, detuning: float) -> float:
    return math.exp(-0.5 * sigma * sigma * detuning * detuning)


def _pulse_couplings(basis: ExcitonBasis, pulse: PulseSpec) -> TransitionCouplings:
    amp = pulse_field_amplitude(pulse)
    return TransitionCouplings(
        ag=basis.mu_alpha_g / HBAR * amp * _spectral_factor(pulse.sigma, basis.omega_alpha - pulse.omega_0),
        bg=basis.mu_beta_g / HBAR * amp * _spectral_factor(pulse.sigma, basis.omega_beta - pulse.omega_0),
        fa=basis.mu_f_alpha / HBAR * amp
        * _spectral_factor(pulse.sigma, basis.omega_f - basis.omega_alpha - pulse.omega_0),
        fb=basis.mu_f_beta / HBAR * amp
        * _spectral_factor(pulse.sigma, basis.omega_f - basis.omega_beta - pulse.omega_0),
    )


def compute_couplings(
    basis: ExcitonBasis, pump: PulseSpec, probe: PulseSpec, vac: VacuumParams
) -> CouplingSet:
    """Evaluate all dimensionless couplings for one pump-probe configuration.

    Pulse overlap is not checked here; the signal functions enforce it.
    """
    return CouplingSet(
        pump=_pulse_couplings(basis, pump),
        probe=_pulse_couplings(basis, probe),
        vac_ag=basis.mu_alpha_g / HBAR * vac.eta_vac,
        vac_bg=basis.mu_beta_g / HBAR * vac.eta_vac,
        delta_window=interference_window(basis.omega_alpha, basis.omega_beta, vac.gamma),
        min_waiting_time=OVERLAP_FACTOR * (pump.sigma + probe.sigma),
    )


def _require_nonoverlapping(c: CouplingSet, t_wait: float) -> None:
    if t_wait <= c.min_waiting_time:
        raise PulseOverlapError(
            f"waiting time {t_wait} fs is inside the pulse-overlap region; "
            f"the closed forms require T > {c.min_waiting_time} fs"
        )


def excited_state_absorption(c: CouplingSet, basis: ExcitonBasis, t_wait: float) -> float:
    """ESA signal: interfering two-photon pathways into the doubly excited state.

    Non-negative; beats at the exciton splitting when both pathways are bright.
    """
    _require_nonoverlapping(c, t_wait)
    # only the relative phase of the two pathways survives the modulus
    beat = cmath.exp(1j * basis.splitting * t_wait)
    return abs(c.probe.fa * c.pump.ag + c.probe.fb * c.pump.bg * beat) ** 2


def stimulated_emission(
    c: CouplingSet, basis: ExcitonBasis, t_wait: float
) -> tuple[float, float]:
    """SE signal, split into (classical, vacuum) parts; both <= 0.

    The classical part mirrors ESA with emission back into the probe.  The
    vacuum part has no T dependence -- beats would require vacuum
    interference between probe modes of different frequency, which commute --
    and its alpha/beta cross term survives only for quasidegenerate excitons
    (delta_window = 1).
    """
    _require_nonoverlapping(c, t_wait)
    beat = cmath.exp(1j * basis.splitting * t_wait)
    classical = -(
        abs(c.probe.ag.conjugate() * c.pump.ag + c.probe.bg.conjugate() * c.pump.bg * beat) ** 2
    )

    vac_alpha = c.vac_ag.conjugate() * c.pump.ag
    vac_beta = c.vac_bg.conjugate() * c.pump.bg
    cross = 2.0 * c.delta_window * (vac_alpha * vac_beta.conjugate()).real
    vacuum = -(abs(vac_alpha) ** 2 + abs(vac_beta) ** 2 + cross)
    return classical, vacuum


def ground_state_bleach(c: CouplingSet) -> float:
    """GSB signal: incoherent product of pump and probe absorption; <= 0, T-free."""
    pump_pop = abs(c.pump.ag) ** 2 + abs(c.pump.bg) ** 2
    probe_pop = abs(c.probe.ag) ** 2 + abs(c.probe.bg) ** 2
    return -pump_pop * probe_pop


def single_molecule_signal(
    basis: ExcitonBasis,
    pump: PulseSpec,
    probe: PulseSpec,
    vac: VacuumParams,
    t_wait: float,
) -> SignalComponents:
    """Full single-dimer signal at waiting time t_wait (fs)."""
    c = compute_couplings(basis, pump, probe, vac)
    esa = excited_state_absorption(c, basis, t_wait)
    se_classical, se_vacuum = stimulated_emission(c, basis, t_wait)
    return SignalComponents(
        t_wait=t_wait,
        esa=esa,
        se_classical=se_classical,
        se_vacuum=se_vacuum,
        gsb=ground_state_bleach(c),
    )


# --- many-molecule signal ---------------------------------------------------
#
# N_mol identical dimers at positions r_j; X = sum_j exp(i (k_P - k_P') r_j)
# is the phase-matching sum, |X|^2 = N_mol^2 when collinear.


def ensemble_components(
    c: CouplingSet,
    basis: ExcitonBasis,
    t_wait: float,
    x_squared: float,
    n_mol: float,
) -> tuple[float, float, float, float]:
    """Per-process many-molecule sums (esa, se_classical, se_vacuum, gsb).

    ESA sums pathways over ordered molecule pairs: same-transition pairs pick
    up the exchange weight N(N-2) + |X|^2, different-transition pairs
    N(N-1), ground-state coherences (|X|^2 - N), and the single-molecule
    two-photon term N.  SE keeps a single phase per molecule, giving a clean
    |X|^2 times the single-molecule SE (vacuum part included).  GSB is an
    incoherent product of per-molecule absorptions, N^2 overall.
    """
    _require_nonoverlapping(c, t_wait)
    n = float(n_mol)
    pop_aa = abs(c.pump.ag) ** 2 * abs(c.probe.ag) ** 2
    pop_bb = abs(c.pump.bg) ** 2 * abs(c.probe.bg) ** 2
    pop_ab = abs(c.pump.ag) ** 2 * abs(c.probe.bg) ** 2
    pop_ba = abs(c.pump.bg) ** 2 * abs(c.probe.ag) ** 2

    beat = cmath.exp(1j * basis.splitting * t_wait)
    ground_coherence = (
        c.pump.ag.conjugate() * c.probe.bg.conjugate() * c.pump.bg * c.probe.ag * beat
    )

    esa = (
        (n * (n - 2.0) + x_squared) * (pop_aa + pop_bb)
        + n * (n - 1.0) * (pop_ab + pop_ba)
        + (x_squared - n) * 2.0 * ground_coherence.real
        + n * excited_state_absorption(c, basis, t_wait)
    )
    se_classical_single, se_vacuum_single = stimulated_emission(c, basis, t_wait)
    return (
        esa,
        x_squared * se_classical_single,
        x_squared * se_vacuum_single,
        n * n * ground_state_bleach(c),
    )


def ensemble_total_direct(
    c: CouplingSet,
    basis: ExcitonBasis,
    t_wait: float,
    x_squared: float,
    n_mol: float,
) -> float:
    """Many-molecule total after the ESA/SE/GSB cancellations are carried out.

    Classical rows scale with N_mol; only the vacuum row keeps |X|^2.
    Evaluated independently of `ensemble_components` as an algebraic
    cross-check of the cancellation.
    """
    _require_nonoverlapping(c, t_wait)
    n = float(n_mol)
    pump, probe = c.pump, c.probe
    classical_pop = (
        abs(pump.ag) ** 2 * (abs(probe.fa) ** 2 - 2.0 * abs(probe.ag) ** 2)
        + abs(pump.bg) ** 2 * (abs(probe.fb) ** 2 - 2.0 * abs(probe.bg) ** 2)
        - abs(pump.ag) ** 2 * abs(probe.bg) ** 2
        - abs(pump.bg) ** 2 * abs(probe.ag) ** 2
    )
    beat = cmath.exp(-1j * basis.splitting * t_wait)
    esa_coherence = pump.ag * pump.bg.conjugate() * probe.fa * probe.fb.conjugate() * beat
    se_coherence = pump.ag * pump.bg.conjugate() * probe.ag.conjugate() * probe.bg * beat

    vac_alpha = c.vac_ag.conjugate() * pump.ag
    vac_beta = c.vac_bg.conjugate() * pump.bg
    vacuum = (
        abs(vac_alpha) ** 2
        + abs(vac_beta) ** 2
        + 2.0 * c.delta_window * (vac_alpha * vac_beta.conjugate()).real
    )
    return (
        n * classical_pop
        + n * 2.0 * esa_coherence.real
        - n * 2.0 * se_coherence.real
        - x_squared * vacuum
    )


def ensemble_signal(
    basis: ExcitonBasis,
    pump: PulseSpec,
    probe: PulseSpec,
    vac: VacuumParams,
    t_wait: float,
    x_squared: float,
    n_mol: float,
) -> SignalComponents:
    """Many-molecule signal for a given phase-matching weight |X|^2.

    Only derived for well-split excitons (delta_window = 0); quasidegenerate
    ensembles are rejected.  At n_mol = 1, x_squared = 1 this reduces to the
    single-molecule signal.
    """
    if n_mol < 1:
        raise ValueError(f"n_mol must be >= 1, got {n_mol}")
    if x_squared < 0:
        raise ValueError(f"x_squared must be >= 0, got {x_squared}")
    c = compute_couplings(basis, pump, probe, vac)
    if c.delta_window == 1:
        raise UnsupportedRegimeError(
            "ensemble signal is only derived for exciton splittings beyond the "
            "lifetime window (delta_window = 0); got quasidegenerate excitons"
        )
    esa, se_classical, se_vacuum, gsb = ensemble_components(c, basis, t_wait, x_squared, n_mol)
    return SignalComponents(
        t_wait=t_wait, esa=esa, se_classical=se_classical, se_vacuum=se_vacuum, gsb=gsb
    )
