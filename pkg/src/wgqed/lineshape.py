"""Closed-form steady-state transmission models.

Two views of the same physics: the notch-resonator form (quality factors,
background environment) and the direct qubit form (loss rates, drive
saturation), plus the weak-drive bridge between them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DomainError,
    EnvironmentParams,
    QubitParams,
    ResonatorParams,
    TWO_PI,
    decoherence_rate,
    relaxation_rate,
)


@dataclass(frozen=True)
class DriveSpec:
    """Coherent probe: Rabi rate (rad/s) and carrier frequency (Hz)."""

    rabi_rate: float
    frequency: float

    def __post_init__(self):
        if self.rabi_rate < 0:
            raise DomainError("rabi_rate must be >= 0")
        if self.frequency <= 0:
            raise DomainError("frequency must be positive")


def _notch_curve(freq, f_res, q_l, q_c, phi, amplitude, phase_offset, delay):
    """Vectorized notch model; raw-parameter kernel shared with the fitters."""
    freq = np.asarray(freq, dtype=float)
    env = amplitude * np.exp(1j * (phase_offset - TWO_PI * freq * delay))
    denom = 1.0 + 2j * q_l * (freq / f_res - 1.0)
    return env * (1.0 - (q_l / q_c) * np.exp(1j * phi) / denom)


def _qubit_s21_curve(freq, f01, gamma10, gamma_l, gamma_phi, rabi_rate):
    """Vectorized qubit transmission; raw-parameter kernel for the fitters."""
    freq = np.asarray(freq, dtype=float)
    gamma = 0.5 * gamma10 + 0.5 * gamma_l + gamma_phi
    gamma1 = gamma10 + gamma_l
    delta = (TWO_PI * freq - TWO_PI * f01) / gamma
    if rabi_rate > 0 and gamma1 <= 0:
        # fully saturated dark limit: no radiated field
        return np.ones_like(freq, dtype=complex)
    sat = rabi_rate**2 / (gamma1 * gamma) if rabi_rate > 0 else 0.0
    return 1.0 - (gamma10 / (2.0 * gamma)) * (1.0 - 1j * delta) / (
        1.0 + delta**2 + sat
    )


def eval_notch(res: ResonatorParams, env: EnvironmentParams, freq):
    """Notch-resonator transmission at ``freq`` (Hz; scalar or array).

    S21 = E(f) * (1 - (q_l/q_c) e^{i phi} / (1 + 2i q_l (f/f_res - 1)))
    with E(f) = amplitude * e^{i(phase_offset - 2 pi f delay)}.
    """
    if np.any(np.asarray(freq) <= 0):
        raise DomainError("freq must be positive")
    out = _notch_curve(freq, res.f_res, res.q_l, res.q_c, res.phi,
                       env.amplitude, env.phase_offset, env.electrical_delay)
    return complex(out) if np.isscalar(freq) else out


def eval_qubit_s21(q: QubitParams, drive: DriveSpec) -> complex:
    """Steady-state transmission past the qubit under a coherent drive.

    S21 = 1 - (Gamma10/2 gamma10) (1 - i d) / (1 + d^2 + s) with
    d = (omega - omega01)/gamma10 and s the saturation parameter.
    """
    if decoherence_rate(q) <= 0:
        raise DomainError("all loss rates zero: transmission model singular")
    return complex(
        _qubit_s21_curve(drive.frequency, q.f01, q.gamma10, q.gamma_l,
                         q.gamma_phi, drive.rabi_rate)
    )


def saturation_parameter(q: QubitParams, drive: DriveSpec) -> float:
    """s = Omega_p^2 / ((Gamma10 + Gamma_l) gamma10), dimensionless."""
    denom = relaxation_rate(q) * decoherence_rate(q)
    if denom <= 0:
        raise DomainError("saturation parameter undefined: zero denominator")
    return drive.rabi_rate**2 / denom


def eval_weak_drive(q: QubitParams, freq: float) -> complex:
    """Weak-drive (zero-saturation) transmission, the plain Lorentzian dip.

    Algebraically identical to :func:`eval_qubit_s21` at rabi_rate = 0.
    """
    if freq <= 0:
        raise DomainError("freq must be positive")
    gamma = decoherence_rate(q)
    if gamma <= 0:
        raise DomainError("all loss rates zero: transmission model singular")
    delta = (TWO_PI * freq - q.omega01) / gamma
    return 1.0 - (q.gamma10 / (2.0 * gamma)) / (1.0 + 1j * delta)


def notch_params_from_qubit(q: QubitParams) -> ResonatorParams:
    """Recast qubit loss rates as notch quality factors.

    q_c = omega01/Gamma10, q_i = omega01/(Gamma_l + 2 Gamma_phi), and the
    loaded factor composes harmonically, which amounts to
    q_l = omega01 / (2 gamma10).
    """
    if q.gamma10 <= 0:
        raise DomainError("Gamma10 must be positive for the notch reduction")
    omega = q.omega01
    q_c = omega / q.gamma10
    q_l = omega / (2.0 * decoherence_rate(q))
    return ResonatorParams(f_res=q.f01, q_l=q_l, q_c=q_c, phi=0.0)
