"""Physical parameter types, unit conversions, and rate identities.

Conventions used throughout the package:

* transition frequencies (``f01``, ``f12``, trace axes) are ordinary
  frequencies in Hz,
* all loss/decoherence rates are angular rates in rad/s,
* lifetimes relate to angular rates as T = 1/Gamma,
* reported tables divide angular rates by 2*pi and print MHz.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

TWO_PI = 2.0 * math.pi

# Planck constant, J/Hz (exact SI value).
PLANCK_H = 6.62607015e-34


class DomainError(ValueError):
    """Input lies outside the physically meaningful domain of an operation."""


def mhz_to_rad(value_mhz: float) -> float:
    """Ordinary frequency in MHz -> angular rate in rad/s."""
    return TWO_PI * 1e6 * value_mhz


def rad_to_mhz(value_rad: float) -> float:
    """Angular rate in rad/s -> ordinary frequency in MHz."""
    return value_rad / (TWO_PI * 1e6)


@dataclass(frozen=True)
class QubitParams:
    """Transmon transition frequencies and loss rates.

    ``gamma10`` is the radiative decay into the line, ``gamma_l`` the
    non-radiative relaxation, ``gamma_phi`` the pure dephasing rate.
    All three are angular rates (rad/s); ``f01``/``f12`` are in Hz.
    """

    f01: float
    f12: float
    gamma10: float = 0.0
    gamma_l: float = 0.0
    gamma_phi: float = 0.0

    def __post_init__(self):
        if not (self.f01 > 0 and self.f12 > 0):
            raise DomainError("transition frequencies must be positive")
        if not self.f12 < self.f01:
            raise DomainError(
                "f12 must lie below f01 (transmon anharmonicity is negative)"
            )
        for name in ("gamma10", "gamma_l", "gamma_phi"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0")

    @classmethod
    def from_mhz(cls, f01_hz, f12_hz, gamma10_mhz=0.0, gamma_l_mhz=0.0,
                 gamma_phi_mhz=0.0):
        """Build from rates quoted as Gamma/2pi in MHz."""
        return cls(
            f01=f01_hz,
            f12=f12_hz,
            gamma10=mhz_to_rad(gamma10_mhz),
            gamma_l=mhz_to_rad(gamma_l_mhz),
            gamma_phi=mhz_to_rad(gamma_phi_mhz),
        )

    @property
    def omega01(self) -> float:
        return TWO_PI * self.f01

    @property
    def omega12(self) -> float:
        return TWO_PI * self.f12

    @property
    def anharmonicity(self) -> float:
        """alpha = omega12 - omega01 (rad/s), negative for a transmon."""
        return TWO_PI * (self.f12 - self.f01)


@dataclass(frozen=True)
class ResonatorParams:
    """Notch-resonator description of the qubit response.

    ``q_l`` loaded, ``q_c`` coupling quality factor, ``phi`` the
    impedance-mismatch rotation of the resonance circle.
    """

    f_res: float
    q_l: float
    q_c: float
    phi: float = 0.0

    def __post_init__(self):
        if self.f_res <= 0:
            raise DomainError("f_res must be positive")
        if not (self.q_c > 0 and self.q_l > 0):
            raise DomainError("quality factors must be positive")
        # 1/q_l = 1/q_c + 1/q_i requires 1/q_l >= 1/q_c (q_i may be infinite)
        if 1.0 / self.q_l < 1.0 / self.q_c * (1.0 - 1e-12):
            raise DomainError("1/q_l must be >= 1/q_c (internal loss >= 0)")
        if not abs(self.phi) < math.pi:
            raise DomainError("phi must satisfy |phi| < pi")

    @property
    def q_i(self) -> Optional[float]:
        """Internal quality factor; None encodes the lossless (unbounded) limit."""
        inv = 1.0 / self.q_l - 1.0 / self.q_c
        if inv <= 0.0:
            return None
        return 1.0 / inv


@dataclass(frozen=True)
class EnvironmentParams:
    """Setup background: overall amplitude, phase offset, and cable delay."""

    amplitude: float = 1.0
    phase_offset: float = 0.0
    electrical_delay: float = 0.0

    def __post_init__(self):
        if self.amplitude <= 0:
            raise DomainError("amplitude must be positive")


@dataclass(frozen=True)
class FluxMap:
    """Quadratic bias-to-frequency map around the sweet spot.

    ``quad_coeff`` in Hz/uA^2 (non-positive: frequency is maximal at the
    sweet spot), ``intercept`` in Hz.
    """

    quad_coeff: float
    intercept: float

    def __post_init__(self):
        if self.quad_coeff > 0:
            raise DomainError("quad_coeff must be <= 0 (sweet-spot maximum)")


_AXIS_UNITS = {
    "frequency": "Hz",
    "time": "s",
    "delay": "s",
    "amplitude": "rad/s",
}


@dataclass(frozen=True)
class ComplexTrace:
    """A strictly increasing real axis paired with complex samples."""

    axis: np.ndarray
    values: np.ndarray
    axis_kind: str
    unit: str = ""

    def __post_init__(self):
        if self.axis_kind not in _AXIS_UNITS:
            raise DomainError(f"unknown axis_kind {self.axis_kind!r}")
        axis = np.asarray(self.axis, dtype=float)
        values = np.asarray(self.values, dtype=complex)
        if axis.ndim != 1 or values.ndim != 1 or len(axis) != len(values):
            raise DomainError("axis and values must be 1-D and equally long")
        if len(axis) < 2:
            raise DomainError("a trace needs at least 2 points")
        if not np.all(np.diff(axis) > 0):
            raise DomainError("axis must be strictly increasing")
        object.__setattr__(self, "axis", axis)
        object.__setattr__(self, "values", values)
        if not self.unit:
            object.__setattr__(self, "unit", _AXIS_UNITS[self.axis_kind])

    def __len__(self):
        return len(self.axis)


class QualityFactors(NamedTuple):
    """(q_c, q_i); None encodes an unbounded (lossless) quality factor."""

    q_c: Optional[float]
    q_i: Optional[float]


class TwoToneResult(NamedTuple):
    f12: float
    anharmonicity: float  # omega12 - omega01, rad/s


def dbm_to_watts(power_dbm: float) -> float:
    """Convert a power in dBm to watts."""
    return 10.0 ** ((power_dbm - 30.0) / 10.0)


def photon_number(power_dbm: float, duration: float, carrier: float) -> float:
    """Average photon number of a pulse: P_in * duration / (hbar * omega).

    ``duration`` in seconds, ``carrier`` the ordinary frequency in Hz.
    """
    if duration <= 0:
        raise DomainError("duration must be positive")
    if carrier <= 0:
        raise DomainError("carrier must be positive")
    # hbar * 2*pi*f == h * f
    return dbm_to_watts(power_dbm) * duration / (PLANCK_H * carrier)


def decoherence_rate(params: QubitParams) -> float:
    """gamma10 = Gamma10/2 + Gamma_l/2 + Gamma_phi (rad/s)."""
    return 0.5 * params.gamma10 + 0.5 * params.gamma_l + params.gamma_phi


def relaxation_rate(params: QubitParams) -> float:
    """Total energy relaxation rate Gamma1 = Gamma10 + Gamma_l (rad/s)."""
    return params.gamma10 + params.gamma_l


def rabi_decay_rate(params: QubitParams) -> float:
    """(Gamma_phi + Gamma10 + Gamma_l)/2, the rate identity used when the
    Rabi envelope is converted to a pure-dephasing estimate."""
    return 0.5 * (params.gamma_phi + params.gamma10 + params.gamma_l)


def bloch_rabi_envelope_rate(params: QubitParams) -> float:
    """Envelope decay of resonant strongly driven Rabi oscillations for the
    damped Bloch equations: 3*Gamma1/4 + Gamma_phi/2 (rad/s).

    This is what the Lindblad model actually produces; it differs from
    :func:`rabi_decay_rate` by Gamma1/4.
    """
    return 0.75 * relaxation_rate(params) + 0.5 * params.gamma_phi


def rates_to_quality_factors(params: QubitParams) -> QualityFactors:
    """Map loss rates to (q_c, q_i); None marks an unbounded factor."""
    omega = params.omega01
    q_c = omega / params.gamma10 if params.gamma10 > 0 else None
    denom = params.gamma_l + 2.0 * params.gamma_phi
    q_i = omega / denom if denom > 0 else None
    return QualityFactors(q_c=q_c, q_i=q_i)


def flux_to_frequency(fmap: FluxMap, bias_ua: float) -> float:
    """Transition frequency (Hz) at a DC bias given in microamps."""
    return fmap.quad_coeff * bias_ua**2 + fmap.intercept


def omega12_from_two_tone(f01_sweet: float, f02_half_sweet: float) -> TwoToneResult:
    """Infer f12 from the one-photon dip and the two-photon (f02/2) dip.

    f02 = f01 + f12, so f12 = 2*f02_half - f01. The anharmonicity is
    returned as omega12 - omega01 in rad/s.
    """
    if f02_half_sweet > f01_sweet:
        raise DomainError(
            "two-photon dip above f01 violates the negative-anharmonicity "
            "assumption"
        )
    f12 = 2.0 * f02_half_sweet - f01_sweet
    return TwoToneResult(f12=f12, anharmonicity=TWO_PI * (f12 - f01_sweet))
