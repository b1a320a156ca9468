"""Rigid-rotor description of an even-even deformed nucleus.

Energies are in keV, B(E2) in e^2 b^2, magnetic moments in nuclear
magnetons, times in seconds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .errors import InvalidSpin, NonPositiveInput, ValidationError


@dataclass(frozen=True)
class RotorNucleus:
    """A nucleus sitting in one level of a rotational band.

    ``g_r`` defaults to Z/A (homogeneous charge and mass distributions).
    ``rot_const`` defaults to the value fitted to ``E_level``.
    """

    Z: int
    A: int
    I: int = 2
    E_level: float = 44.91  # keV
    B_E2_up: float = 12.3  # e^2 b^2, B(E2; 0+ -> I+)
    g_r: Optional[float] = None
    Omega: float = 0
    mu_prime: float = 0.0
    rot_const: Optional[float] = field(default=None)

    def __post_init__(self):
        if not 1 <= self.Z <= self.A:
            raise ValidationError(f"Z = {self.Z}, A = {self.A}", "1 <= Z <= A")
        if self.I < 0:
            raise InvalidSpin(f"I = {self.I} is negative")
        if self.I > 0 and not self.E_level > 0:
            raise ValidationError(f"E_level = {self.E_level!r} keV", "E_level > 0 for excited states")
        if self.Omega == 0 and self.mu_prime != 0:
            raise ValidationError(
                f"mu_prime = {self.mu_prime} with Omega = 0",
                "ground-state band requires Omega == 0 and mu_prime == 0",
            )
        if self.g_r is None:
            object.__setattr__(self, "g_r", self.Z / self.A)
        if self.rot_const is None and self.I >= 1:
            object.__setattr__(self, "rot_const", rotational_constant_from_level(self.E_level, self.I))
        if self.rot_const is not None and not self.rot_const > 0:
            raise ValidationError(f"rot_const = {self.rot_const!r} keV", "rot_const > 0")

    @property
    def magnetic_moment(self) -> float:
        return rotor_magnetic_moment(self)


def rotational_energy(rot_const: float, I: int) -> float:
    """E_I = A I(I+1)."""
    return rot_const * I * (I + 1)


def rotational_constant_from_level(E_level: float, I: int) -> float:
    """Rotational constant (keV) from one band member: E_I / (I(I+1))."""
    if I < 1:
        raise InvalidSpin(f"need I >= 1 to fit a rotational constant, got {I}")
    if not E_level > 0:
        raise NonPositiveInput(f"E_level must be positive, got {E_level!r}")
    return E_level / (I * (I + 1))


def rotor_magnetic_moment(nuc: RotorNucleus) -> float:
    """mu = mu' Omega/(I+1) + g_r (I - Omega^2/(I+1)), in nuclear magnetons."""
    I, Om = nuc.I, nuc.Omega
    if I == 0:
        return 0.0
    return nuc.mu_prime * Om / (I + 1) + nuc.g_r * (I - Om * Om / (I + 1))


def rotation_period(rot_const: float, E_level: float, const: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Classical revolution time of the rotor.

    From E = omega^2 / (4 A), omega = 2 sqrt(A E) / hbar.
    """
    if not (rot_const > 0 and E_level > 0):
        raise NonPositiveInput("rot_const and E_level must be positive")
    omega = 2.0 * math.sqrt(rot_const * E_level) * 1e3 / const.hbar
    return 2.0 * math.pi / omega


def e2_width(
    B_E2_up: float, E_level: float, I_initial: int = 2, const: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Radiative E2 decay rate (1/s) of the I+ band member to the 0+ head.

    Gamma = (4 pi / 75) (E/hbar c)^5 e^2 B(E2 down) / hbar, with
    B(E2 down) = B(E2 up) / (2I + 1). No internal conversion.
    """
    if not (B_E2_up > 0 and E_level > 0 and I_initial > 0):
        raise NonPositiveInput("B(E2), E_level and I must be positive")
    b_down_fm4 = B_E2_up * 1e4 / (2 * I_initial + 1)
    k = E_level * 1e-3 / const.hbar_c  # fm^-1
    gamma_mev = 4.0 * math.pi / 75.0 * k**5 * const.e_squared * b_down_fm4
    return gamma_mev * 1e6 / const.hbar


def e2_lifetime(
    B_E2_up: float, E_level: float, I_initial: int = 2, const: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Radiative lifetime (s) of the I+ band member; see :func:`e2_width`."""
    return 1.0 / e2_width(B_E2_up, E_level, I_initial, const)
