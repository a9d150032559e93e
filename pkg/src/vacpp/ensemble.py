"""Molecular ensembles: positions, phase-matching sum, superradiance scaling.

Molecules occupy the coherent volume of the beams, modeled as a cylinder of
diameter D and length L with its axis along z.  The phase-matching sum
X = sum_j exp(i (k_pump - k_probe) . r_j) weights the vacuum part of the
ensemble signal: collinear beams give |X|^2 = N_mol^2 for any positions
(superradiant), while strongly crossed beams average to E|X|^2 = N_mol.

Position sampling uses the counter-based Philox generator, so draws are
reproducible for a given seed and independent streams can be spawned for
parallel work.
"""

import math
from dataclasses import dataclass

import numpy as np

from .dimer import ExcitonBasis
from .errors import UnsupportedRegimeError
from .field import PulseSpec, VacuumParams, pulse_field_amplitude
from .signals import SignalComponents, compute_couplings, ensemble_signal

_MAX_SAMPLED = 10**6  # direct position sampling cap; beyond this use |X|^2 analytically


@dataclass(frozen=True)
class CylinderGeometry:
    """Coherent volume of the beams: diameter and length in meters, axis z."""

    diameter: float
    length: float

    def __post_init__(self):
        if self.diameter <= 0 or self.length <= 0:
            raise ValueError(
                f"cylinder dimensions must be positive, got D={self.diameter}, L={self.length}"
            )

    def contains(self, positions: np.ndarray, tol: float = 1e-12) -> bool:
        r2 = positions[:, 0] ** 2 + positions[:, 1] ** 2
        radius = self.diameter / 2.0
        return bool(
            np.all(r2 <= radius * radius * (1.0 + tol))
            and np.all(np.abs(positions[:, 2]) <= self.length / 2.0 * (1.0 + tol))
        )


def sample_positions(n_mol: int, geometry: CylinderGeometry, seed: int) -> np.ndarray:
    """Uniform i.i.d. positions (m) inside the cylinder, deterministic per seed."""
    if n_mol < 1:
        raise ValueError(f"n_mol must be >= 1, got {n_mol}")
    if n_mol > _MAX_SAMPLED:
        raise ValueError(
            f"direct sampling capped at {_MAX_SAMPLED} molecules, got {n_mol}; "
            "use the analytic |X|^2 forms for larger ensembles"
        )
    rng = np.random.Generator(np.random.Philox(seed))
    radius = geometry.diameter / 2.0 * np.sqrt(rng.random(n_mol))
    angle = 2.0 * math.pi * rng.random(n_mol)
    z = geometry.length * (rng.random(n_mol) - 0.5)
    return np.column_stack((radius * np.cos(angle), radius * np.sin(angle), z))


@dataclass(frozen=True)
class EnsembleSpec:
    """Positions of an ensemble plus the two wavevectors acting on it."""

    n_mol: int
    positions: np.ndarray  # (n_mol, 3), meters
    k_pump: np.ndarray  # rad/m
    k_probe: np.ndarray
    geometry: CylinderGeometry
    seed: int

    def __post_init__(self):
        positions = np.asarray(self.positions, dtype=float)
        object.__setattr__(self, "positions", positions)
        object.__setattr__(self, "k_pump", np.asarray(self.k_pump, dtype=float))
        object.__setattr__(self, "k_probe", np.asarray(self.k_probe, dtype=float))
        if positions.shape != (self.n_mol, 3):
            raise ValueError(
                f"expected {self.n_mol} positions of shape (n, 3), got {positions.shape}"
            )
        if not self.geometry.contains(positions):
            raise ValueError("positions must lie inside the cylinder")

    @classmethod
    def sample(
        cls,
        n_mol: int,
        geometry: CylinderGeometry,
        seed: int,
        k_pump,
        k_probe,
    ) -> "EnsembleSpec":
        return cls(
            n_mol=n_mol,
            positions=sample_positions(n_mol, geometry, seed),
            k_pump=np.asarray(k_pump, dtype=float),
            k_probe=np.asarray(k_probe, dtype=float),
            geometry=geometry,
            seed=seed,
        )


def phase_sum(spec: EnsembleSpec) -> tuple[complex, float]:
    """Exact phase-matching sum: (X, |X|^2).

    Collinear wavevectors give X = N_mol identically, since every phase is
    zero regardless of the positions.
    """
    delta_k = spec.k_pump - spec.k_probe
    phases = spec.positions @ delta_k
    x = complex(np.sum(np.exp(1j * phases)))
    return x, abs(x) ** 2


def superradiance_ratio(
    basis: ExcitonBasis,
    pump: PulseSpec,
    probe: PulseSpec,
    vac: VacuumParams,
    n_mol: float,
    x_squared: float,
) -> float:
    """|vacuum SE| / |classical SE| of the ensemble signal's population parts.

    The classical SE populations scale with N_mol after the ESA/SE/GSB
    cancellations; the vacuum part keeps |X|^2.  Collinear, the ratio reduces
    to N_mol (amp_vac / amp_probe)^2 weighted by the probe spectral factors
    of the two transitions.

    Raises:
        UnsupportedRegimeError: for quasidegenerate excitons (the ensemble
            signal is only derived for delta_window = 0).
        ZeroDivisionError: if both classical SE populations vanish.
    """
    c = compute_couplings(basis, pump, probe, vac)
    if c.delta_window == 1:
        raise UnsupportedRegimeError(
            "superradiance ratio is defined in the well-split exciton regime "
            "(delta_window = 0)"
        )
    classical = n_mol * (
        abs(c.probe.ag.conjugate() * c.pump.ag) ** 2
        + abs(c.probe.bg.conjugate() * c.pump.bg) ** 2
    )
    quantum = x_squared * (
        abs(c.vac_ag.conjugate() * c.pump.ag) ** 2
        + abs(c.vac_bg.conjugate() * c.pump.bg) ** 2
    )
    if classical == 0.0:
        raise ZeroDivisionError(
            "classical stimulated emission vanishes for these parameters; "
            "the superradiance ratio is undefined"
        )
    return quantum / classical


def amplitude_ratio(probe: PulseSpec, vac: VacuumParams, n_mol: float) -> float:
    """Collinear vacuum/classical ratio with coupling weights cancelled.

    N_mol (amp_vac / amp_probe)^2 = N_mol Gamma / (N_probe sqrt(pi) sigma),
    the pure field-amplitude factor behind the crossover condition
    N_mol Gamma ~ N_probe sigma.
    """
    return n_mol * (vac.eta_vac / pulse_field_amplitude(probe)) ** 2


def beat_visibility_from_sweep(totals: np.ndarray) -> float:
    """(max - min) / |max + min| of a signal sweep.

    Signals here are mostly negative, so the denominator is taken in
    magnitude; the result is the usual non-negative modulation contrast.
    """
    totals = np.asarray(totals, dtype=float)
    hi, lo = float(np.max(totals)), float(np.min(totals))
    denom = abs(hi + lo)
    if denom == 0.0:
        raise ZeroDivisionError("signal sweep sums to zero; visibility undefined")
    return (hi - lo) / denom


def beat_visibility(
    basis: ExcitonBasis,
    pump: PulseSpec,
    probe: PulseSpec,
    vac: VacuumParams,
    t_grid: np.ndarray,
    n_mol: float,
    x_squared: float,
    include_vacuum: bool = True,
) -> float:
    """Quantum-beat contrast of the ensemble signal over a waiting-time sweep.

    The sweep must cover at least three beat periods of the exciton
    splitting so the extrema are trustworthy.  With the vacuum term included
    the static background grows as |X|^2 while the beats grow as N_mol, so
    collinear visibility falls with molecule count.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    splitting = basis.splitting
    if splitting <= 0:
        raise ValueError("beat visibility requires split excitons")
    span_needed = 3.0 * 2.0 * math.pi / splitting
    if t_grid.max() - t_grid.min() < span_needed:
        raise ValueError(
            f"waiting-time sweep must cover >= 3 beat periods "
            f"({span_needed:.1f} fs), got {t_grid.max() - t_grid.min():.1f} fs"
        )
    totals = []
    for t in t_grid:
        parts: SignalComponents = ensemble_signal(
            basis, pump, probe, vac, float(t), x_squared, n_mol
        )
        total = parts.total if include_vacuum else parts.total - parts.se_vacuum
        totals.append(total)
    return beat_visibility_from_sweep(np.asarray(totals))
