"""Shared domain types and unit conventions.

Everything is expressed in units of the mechanical angular frequency
(``omega_m = 1`` by default), and all dynamics live in the frame rotating at
the cavity resonance, so the cavity frequency itself never needs a value.
Time is measured in natural units ``1/omega_m``; one mechanical period is
``T = 2*pi/omega_m``.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

from .errors import ConfigError

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SystemParams:
    """Physical rates of the optomechanical system and its baths.

    All rates are in units of ``omega_m``.  ``kappa`` is the cavity photon
    loss rate, ``gamma`` the mechanical decay rate and ``nbar_bath`` the mean
    thermal occupation of the mechanical bath.
    """

    g0: float
    kappa: float = 0.0
    gamma: float = 0.0
    nbar_bath: float = 0.0
    omega_m: float = 1.0

    def __post_init__(self):
        if not self.omega_m > 0:
            raise ConfigError("omega_m", "must be > 0")
        for name in ("g0", "kappa", "gamma", "nbar_bath"):
            if getattr(self, name) < 0:
                raise ConfigError(name, "must be >= 0")

    @property
    def period(self) -> float:
        return TWO_PI / self.omega_m

    @property
    def kerr_shift(self) -> float:
        """Photon-number nonlinearity g0**2 / omega_m."""
        return self.g0**2 / self.omega_m

    def validity_report(self, drive: "DriveSpec | None" = None) -> dict:
        """Flags for the weak-coupling and weak-driving assumptions.

        The perturbative treatment needs ``(g0/omega_m)**4 << 1`` and
        ``(eps/omega_m)**2 << 1`` for every drive amplitude.
        """
        coupling_ratio = (self.g0 / self.omega_m) ** 4
        report = {
            "coupling_ratio_g0_pow4": coupling_ratio,
            "weak_coupling_ok": coupling_ratio < 0.01,
        }
        if drive is not None:
            drive_ratio = max(
                ((tone.amplitude / self.omega_m) ** 2 for tone in drive.tones),
                default=0.0,
            )
            report["drive_ratio_eps_pow2"] = drive_ratio
            report["weak_driving_ok"] = drive_ratio < 0.01
        return report


@dataclass(frozen=True)
class DriveTone:
    """One Fourier component of the drive: amplitude, detuning from the
    cavity resonance, and phase (stored modulo 2*pi)."""

    amplitude: float
    detuning: float = 0.0
    phase: float = 0.0

    def __post_init__(self):
        if self.amplitude < 0:
            raise ConfigError("amplitude", "must be >= 0")
        object.__setattr__(self, "phase", self.phase % TWO_PI)


@dataclass(frozen=True)
class DriveSpec:
    """A finite Fourier series of drive tones.

    In the frame rotating at the cavity resonance the drive amplitude is
    ``zeta(t) = sum_j eps_j * exp(i*psi_j) * exp(-i*Delta_j*t)``.
    """

    tones: tuple[DriveTone, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "tones", tuple(self.tones))

    @classmethod
    def monochromatic(cls, amplitude, detuning, phase=0.0) -> "DriveSpec":
        return cls((DriveTone(amplitude, detuning, phase),))

    @classmethod
    def bichromatic(cls, amp1, det1, amp2, det2, rel_phase) -> "DriveSpec":
        """Two tones; the first tone's phase is gauge-fixed to zero."""
        return cls(
            (DriveTone(amp1, det1, 0.0), DriveTone(amp2, det2, rel_phase))
        )

    def value(self, t: float) -> complex:
        """Complex drive amplitude zeta(t) in the rotating frame."""
        return sum(
            (
                tone.amplitude
                * cmath.exp(1j * (tone.phase - tone.detuning * t))
                for tone in self.tones
            ),
            complex(0.0),
        )

    def scaled(self, factor: float) -> "DriveSpec":
        """All amplitudes multiplied by ``factor``."""
        return DriveSpec(
            tuple(
                DriveTone(tone.amplitude * factor, tone.detuning, tone.phase)
                for tone in self.tones
            )
        )


def drive_value(drive: DriveSpec, t: float) -> complex:
    return drive.value(t)


@dataclass(frozen=True)
class Truncation:
    """Hard Fock-space cutoff: highest retained photon and phonon index."""

    n_phot_max: int
    n_phon_max: int

    def __post_init__(self):
        if self.n_phot_max < 1 or self.n_phon_max < 1:
            raise ConfigError("truncation", "both cutoffs must be >= 1")

    @property
    def dim_phot(self) -> int:
        return self.n_phot_max + 1

    @property
    def dim_phon(self) -> int:
        return self.n_phon_max + 1

    @property
    def dim(self) -> int:
        return self.dim_phot * self.dim_phon


class ObjectiveKind(enum.Enum):
    MIN_G2 = "min_g2"
    FLAT_MIN = "flat_min"
    FLAT_MIN_OCC = "flat_min_occ"


@dataclass(frozen=True)
class ObjectiveSpec:
    """What the drive optimizer minimizes.

    ``t_op`` is the target time in mechanical periods.  ``w_d`` and ``w_s``
    weight the first and second time derivative (FLAT_MIN and FLAT_MIN_OCC);
    ``w_1`` weights the inverse single-photon occupation (FLAT_MIN_OCC only).
    """

    t_op: float
    kind: ObjectiveKind = ObjectiveKind.MIN_G2
    w_d: float = 0.0
    w_s: float = 0.0
    w_1: float = 0.0

    def __post_init__(self):
        if not self.t_op > 0:
            raise ConfigError("t_op", "must be > 0")
        for name in ("w_d", "w_s", "w_1"):
            if getattr(self, name) < 0:
                raise ConfigError(name, "must be >= 0")


def spectrum(n: int, m: int, params: SystemParams) -> float:
    """Energy of the |n photons, m phonons> eigenstate in the rotating frame.

    The cavity-frequency contribution is dropped (rotating-frame convention),
    leaving ``n * (-n * g0**2 / omega_m) + m * omega_m``.
    """
    if n < 0 or m < 0:
        raise ConfigError("n,m", "occupation numbers must be >= 0")
    return n * (-n * params.g0**2 / params.omega_m) + m * params.omega_m
