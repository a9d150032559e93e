"""Frequency-integrated pump-probe signals of coupled chromophore dimers.

Closed-form ESA / SE / GSB signals driven by Gaussian multimode coherent
states, including the quantum-vacuum correction to stimulated emission and
its superradiant enhancement in collinear many-molecule samples, validated
against a brute-force operator-algebra and time-quadrature reference.
"""

from .dimer import DimerSpec, ExcitonBasis, diagonalize_dimer, transform_dipoles
from .ensemble import (
    CylinderGeometry,
    EnsembleSpec,
    amplitude_ratio,
    beat_visibility,
    beat_visibility_from_sweep,
    phase_sum,
    sample_positions,
    superradiance_ratio,
)
from .errors import (
    ConfigError,
    ConvergenceError,
    PulseOverlapError,
    UnsupportedRegimeError,
)
from .experiment import (
    ExperimentParams,
    PROPOSAL_DEFAULTS,
    coherent_volume,
    concentration_from_n_mol,
    n_mol_from_concentration,
    photon_number,
    proposal_report,
    spectral_width_report,
)
from .field import (
    CoherentAmplitudes,
    PulseSpec,
    VacuumParams,
    envelope_from_modes,
    gaussian_amplitudes,
    pulse_field_amplitude,
    temporal_envelope,
    vacuum_field_amplitude,
)
from .operators import (
    NormalForm,
    OperatorString,
    annihilate,
    coherent_expectation,
    create,
    normal_order,
)
from .quadrature import (
    OracleSignals,
    QuadratureConfig,
    QuadratureValue,
    compare_signals,
    esa_by_quadrature,
    gsb_by_quadrature,
    oracle_signals,
    regularized_phase_integral,
    se_by_quadrature,
)
from .signals import (
    CouplingSet,
    SignalComponents,
    compute_couplings,
    ensemble_components,
    ensemble_signal,
    ensemble_total_direct,
    excited_state_absorption,
    ground_state_bleach,
    interference_window,
    single_molecule_signal,
    stimulated_emission,
)

__version__ = "0.1.0"
