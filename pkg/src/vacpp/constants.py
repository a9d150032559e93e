"""Physical constants and unit conventions.

Internal unit system: time in femtoseconds, angular frequency in rad/fs.
SI constants enter only when converting pulse parameters into field
amplitudes (V*s/m); every downstream light-matter coupling is dimensionless.

The product of an angular frequency in rad/fs and a duration in fs equals
the same product taken in SI units, so amplitude formulas below can mix the
two systems as long as frequencies and times only ever appear multiplied
together.

CODATA 2018 values, frozen here rather than taken from scipy so that
results do not drift with library upgrades.
"""

import math

HBAR = 1.054571817e-34  # J s
PLANCK_H = 6.62607015e-34  # J s (exact)
EPSILON_0 = 8.8541878128e-12  # F/m
C_LIGHT = 299792458.0  # m/s (exact)
N_AVOGADRO = 6.02214076e23  # 1/mol (exact)

FS = 1e-15  # s
C_NM_PER_FS = C_LIGHT * 1e-6  # 299.792458 nm/fs


def wavelength_nm_to_angular_freq(wavelength_nm: float) -> float:
    """Convert a vacuum wavelength in nm to angular frequency in rad/fs."""
    if wavelength_nm <= 0:
        raise ValueError(f"wavelength must be positive, got {wavelength_nm}")
    return 2.0 * math.pi * C_NM_PER_FS / wavelength_nm


def angular_freq_to_wavelength_nm(omega_rad_fs: float) -> float:
    """Convert an angular frequency in rad/fs to a vacuum wavelength in nm."""
    if omega_rad_fs <= 0:
        raise ValueError(f"angular frequency must be positive, got {omega_rad_fs}")
    return 2.0 * math.pi * C_NM_PER_FS / omega_rad_fs
