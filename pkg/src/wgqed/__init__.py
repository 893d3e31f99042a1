"""Characterization lab for a transmon coupled to an open waveguide."""

__version__ = "0.1.0"

from .core import (  # noqa: F401
    ComplexTrace,
    DomainError,
    EnvironmentParams,
    FluxMap,
    QubitParams,
    ResonatorParams,
    bloch_rabi_envelope_rate,
    dbm_to_watts,
    decoherence_rate,
    flux_to_frequency,
    mhz_to_rad,
    omega12_from_two_tone,
    photon_number,
    rabi_decay_rate,
    rad_to_mhz,
    rates_to_quality_factors,
    relaxation_rate,
)
from .lineshape import (  # noqa: F401
    DriveSpec,
    eval_notch,
    eval_qubit_s21,
    eval_weak_drive,
    notch_params_from_qubit,
    saturation_parameter,
)
