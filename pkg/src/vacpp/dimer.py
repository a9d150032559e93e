"""Coupled two-chromophore dimer and its exciton basis.

Two two-level sites a, b with excitation frequencies omega_a, omega_b and an
electronic coupling J form a four-level system {g, alpha, beta, f}.  The
one-exciton block [[omega_a, J], [J, omega_b]] is diagonalized analytically;
the doubly excited level sits at omega_a + omega_b (non-interacting
excitations).  Transition dipoles are scalar projections onto the field
polarization, rotated into the exciton basis by the one-exciton mixing angle.

Frequencies in rad/fs, dipoles in C*m.
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class DimerSpec:
    """Site-basis parameters of one dimer.

    Attributes:
        omega_a: excitation frequency of site a (rad/fs), > 0.
        omega_b: excitation frequency of site b (rad/fs), > 0.
        coupling_j: electronic coupling between the sites (rad/fs), any real.
        mu_ag: transition dipole of site a (C*m), >= 0.
        mu_bg: transition dipole of site b (C*m), >= 0.
    """

    omega_a: float
    omega_b: float
    coupling_j: float
    mu_ag: float
    mu_bg: float

    def __post_init__(self):
        if self.omega_a <= 0 or self.omega_b <= 0:
            raise ValueError(
                f"site frequencies must be positive, got "
                f"omega_a={self.omega_a}, omega_b={self.omega_b}"
            )
        if self.mu_ag < 0 or self.mu_bg < 0:
            raise ValueError(
                f"dipole magnitudes must be non-negative, got "
                f"mu_ag={self.mu_ag}, mu_bg={self.mu_bg}"
            )


@dataclass(frozen=True)
class ExcitonBasis:
    """Diagonalized dimer: energies and exciton-basis transition dipoles.

    omega_g is fixed to zero; only energy differences enter any signal.
    Guaranteed: omega_alpha >= omega_beta, omega_alpha + omega_beta =
    omega_a + omega_b, and omega_f = omega_a + omega_b exactly.
    """

    theta: float  # one-exciton mixing angle (rad)
    delta: float  # (omega_a - omega_b) / 2 (rad/fs)
    omega_bar: float  # (omega_a + omega_b) / 2 (rad/fs)
    omega_alpha: float
    omega_beta: float
    omega_f: float
    mu_alpha_g: float
    mu_beta_g: float
    mu_f_alpha: float
    mu_f_beta: float
    omega_g: float = 0.0

    @property
    def splitting(self) -> float:
        """Exciton splitting omega_alpha - omega_beta (rad/fs)."""
        return self.omega_alpha - self.omega_beta


def transform_dipoles(spec: DimerSpec, theta: float) -> tuple[float, float, float, float]:
    """Rotate site dipoles into the exciton basis.

    With |alpha> = cos(theta)|a> + sin(theta)|b> and |f> = |ab>, the four
    allowed transitions carry

        mu_alpha_g = cos(theta) mu_ag + sin(theta) mu_bg
        mu_beta_g  = -sin(theta) mu_ag + cos(theta) mu_bg
        mu_f_alpha = cos(theta) mu_bg + sin(theta) mu_ag
        mu_f_beta  = -sin(theta) mu_bg + cos(theta) mu_ag

    which reduces to mu_f_alpha = mu_bg, mu_f_beta = mu_ag at theta = 0.

    Returns:
        (mu_alpha_g, mu_beta_g, mu_f_alpha, mu_f_beta)
    """
    c, s = math.cos(theta), math.sin(theta)
    mu_alpha_g = c * spec.mu_ag + s * spec.mu_bg
    mu_beta_g = -s * spec.mu_ag + c * spec.mu_bg
    mu_f_alpha = c * spec.mu_bg + s * spec.mu_ag
    mu_f_beta = -s * spec.mu_bg + c * spec.mu_ag
    return mu_alpha_g, mu_beta_g, mu_f_alpha, mu_f_beta


def diagonalize_dimer(spec: DimerSpec) -> ExcitonBasis:
    """Build the exciton basis of a dimer.

    Eigenvalues are computed as omega_bar +/- sqrt(delta^2 + J^2), which is
    total (no singularity at delta = 0), and the mixing angle as
    0.5 * atan2(J, delta) so that the delta = 0 and delta < 0 branches are
    handled consistently.
    """
    delta = 0.5 * (spec.omega_a - spec.omega_b)
    omega_bar = 0.5 * (spec.omega_a + spec.omega_b)
    half_split = math.hypot(delta, spec.coupling_j)
    theta = 0.5 * math.atan2(spec.coupling_j, delta)
    mu_alpha_g, mu_beta_g, mu_f_alpha, mu_f_beta = transform_dipoles(spec, theta)
    return ExcitonBasis(
        theta=theta,
        delta=delta,
        omega_bar=omega_bar,
        omega_alpha=omega_bar + half_split,
        omega_beta=omega_bar - half_split,
        omega_f=spec.omega_a + spec.omega_b,
        mu_alpha_g=mu_alpha_g,
        mu_beta_g=mu_beta_g,
        mu_f_alpha=mu_f_alpha,
        mu_f_beta=mu_f_beta,
    )
