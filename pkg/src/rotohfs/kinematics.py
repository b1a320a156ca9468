"""Relativistic beam kinematics for a fixed kinetic energy per nucleon."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .errors import NegativeEnergy, NonPositiveInput


@dataclass(frozen=True)
class BeamState:
    kinetic_energy_per_u: float  # MeV/u
    beta: float
    lorentz_gamma: float

    @property
    def beta_gamma(self) -> float:
        return self.beta * self.lorentz_gamma


def beam_from_kinetic(E_kin: float, const: PhysicalConstants = DEFAULT_CONSTANTS) -> BeamState:
    """Beam velocity for ``E_kin`` MeV per atomic mass unit."""
    if E_kin < 0 or not math.isfinite(E_kin):
        raise NegativeEnergy(f"kinetic energy per u must be >= 0, got {E_kin!r}")
    x = E_kin / const.atomic_mass_unit_energy
    gamma = 1.0 + x
    # sqrt(1 - 1/gamma^2) rearranged: no cancellation near rest, and every
    # step is monotone so beta never decreases with E_kin in floating point
    beta = 0.0 if x == 0 else 1.0 / math.sqrt(1.0 + 1.0 / (x * (x + 2.0)))
    return BeamState(E_kin, beta, gamma)


def decay_length(proper_lifetime: float, beam: BeamState, const: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Laboratory 1/e decay length in metres, beta gamma c tau."""
    if not proper_lifetime > 0:
        raise NonPositiveInput(f"lifetime must be positive, got {proper_lifetime!r}")
    return beam.beta_gamma * const.speed_of_light * proper_lifetime


def proper_lifetime_from_length(length: float, beam: BeamState, const: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    if not length > 0:
        raise NonPositiveInput(f"decay length must be positive, got {length!r}")
    if beam.beta == 0:
        raise NonPositiveInput("a beam at rest has no decay length")
    return length / (beam.beta_gamma * const.speed_of_light)


def survival_fraction(z: float, length: float) -> float:
    """Fraction of a moving population still excited after flight distance ``z``."""
    return math.exp(-z / length)
