"""Coulomb excitation of a rotational 2+ level in a thin foil, estimated with
the equivalent-photon method.

Lengths in fm, energies in keV, cross sections in fm^2, areal densities in
atoms/cm^2. B(E2) is in e^2 b^2 with e^2 = alpha hbar c.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional, Tuple

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .errors import NonPositiveInput, ValidationError, ZeroAdiabaticity, ZeroVelocity
from .kinematics import BeamState
from .rotor import RotorNucleus

R0_DEFAULT = 1.2  # fm
XI_WARN = 0.1
THICK_TARGET_WARN = 1e-2


class CoulexWarning(UserWarning):
    """The estimate is being used outside the regime it was derived for."""


@dataclass(frozen=True)
class CoulexScenario:
    projectile: RotorNucleus
    beam: BeamState
    foil_Z: int = 6
    foil_A: float = 12
    foil_areal_density: float = 1.0  # mg/cm^2
    beam_intensity: float = 1e10  # ions/s
    r0: float = R0_DEFAULT  # fm
    b_min: Optional[float] = None  # fm; defaults to the sum of nuclear radii

    def __post_init__(self):
        if self.foil_Z < 1 or self.foil_A < 1:
            raise ValidationError("foil Z and A must be >= 1")
        if self.beam_intensity < 0:
            raise ValidationError(f"beam intensity {self.beam_intensity!r}", "J >= 0")
        if self.b_min is not None and not self.b_min > 0:
            raise ValidationError(f"b_min = {self.b_min!r}", "b_min > 0")

    @property
    def impact_parameter(self) -> float:
        if self.b_min is not None:
            return self.b_min
        return minimum_impact_parameter(self.projectile.A, self.foil_A, self.r0)


@dataclass(frozen=True)
class CoulexResult:
    b_min: float  # fm
    xi: float
    n_e2: float
    sigma: float  # fm^2
    areal_density: float  # cm^-2
    rate: float  # ions/s
    fraction: float


def minimum_impact_parameter(A_projectile: float, A_target: float, r0: float = R0_DEFAULT) -> float:
    """Touching-spheres distance r0 (A1^(1/3) + A2^(1/3)) in fm."""
    if A_projectile < 1 or A_target < 1:
        raise ValidationError("mass numbers must be >= 1")
    if not r0 > 0:
        raise NonPositiveInput(f"r0 must be positive, got {r0!r}")
    return r0 * (A_projectile ** (1.0 / 3.0) + A_target ** (1.0 / 3.0))


def adiabaticity(b_min: float, E_level: float, beam: BeamState, const: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """xi = b_min E / (hbar c beta gamma)."""
    if beam.beta <= 0:
        raise ZeroVelocity("adiabaticity undefined for a beam at rest")
    if not (b_min > 0 and E_level > 0):
        raise NonPositiveInput("b_min and E_level must be positive")
    return b_min * E_level * 1e-3 / (const.hbar_c * beam.beta * beam.lorentz_gamma)


def equivalent_photon_number(
    Z_f: float, beam: BeamState, xi: float, const: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Small-xi E2 equivalent-photon number, 4 alpha Z_f^2 / (pi gamma^2 xi^2 beta^4)."""
    if beam.beta <= 0:
        raise ZeroVelocity("no equivalent photons from a beam at rest")
    if not xi > 0:
        raise ZeroAdiabaticity(f"xi must be positive, got {xi!r}")
    g, b = beam.lorentz_gamma, beam.beta
    return 4.0 * const.alpha * Z_f**2 / (math.pi * g * g * xi * xi * b**4)


def photoabsorption_strength(B_E2_up: float, E_level: float, const: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Weight (fm^2 MeV) of the delta-function E2 photoabsorption line,
    (4 pi^3 / 75) (E / hbar c)^3 e^2 B(E2).
    """
    k = E_level * 1e-3 / const.hbar_c
    return 4.0 * math.pi**3 / 75.0 * k**3 * const.e_squared * B_E2_up * 1e4


def _check_regime(xi: float, fraction: Optional[float] = None) -> None:
    if xi > XI_WARN:
        warnings.warn(
            f"adiabaticity xi = {xi:.3g} > {XI_WARN}; the small-xi photon number overestimates",
            CoulexWarning,
            stacklevel=3,
        )
    if fraction is not None and fraction > THICK_TARGET_WARN:
        warnings.warn(
            f"sigma * N = {fraction:.3g} > {THICK_TARGET_WARN}; single-collision rate no longer linear",
            CoulexWarning,
            stacklevel=3,
        )


def coulex_cross_section(scenario: CoulexScenario, const: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Excitation cross section (fm^2) of the projectile's rotational level.

    The delta-function line collapses the photon-energy integral to
    n(E) * strength / E.
    """
    nuc = scenario.projectile
    if nuc.B_E2_up < 0:
        raise ValidationError(f"B(E2) = {nuc.B_E2_up!r}", "B(E2) >= 0")
    xi = adiabaticity(scenario.impact_parameter, nuc.E_level, scenario.beam, const)
    _check_regime(xi)
    n = equivalent_photon_number(scenario.foil_Z, scenario.beam, xi, const)
    return n * photoabsorption_strength(nuc.B_E2_up, nuc.E_level, const) / (nuc.E_level * 1e-3)


def areal_number_density(
    mass_density: float, mass_number: float, const: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Atoms per cm^2 in a foil of ``mass_density`` mg/cm^2."""
    if not (mass_density > 0 and mass_number > 0):
        raise NonPositiveInput("foil density and mass number must be positive")
    return mass_density * 1e-3 * const.avogadro / mass_number


def excitation_rate(scenario: CoulexScenario, const: PhysicalConstants = DEFAULT_CONSTANTS) -> Tuple[float, float]:
    """(excited ions per second, excited fraction of the beam) behind the foil."""
    return _rate(scenario, coulex_cross_section(scenario, const), const)


def _rate(scenario, sigma, const):
    fraction = sigma * 1e-26 * areal_number_density(scenario.foil_areal_density, scenario.foil_A, const)
    if fraction > THICK_TARGET_WARN:
        _check_regime(0.0, fraction)
    return scenario.beam_intensity * fraction, fraction


def evaluate(scenario: CoulexScenario, const: PhysicalConstants = DEFAULT_CONSTANTS) -> CoulexResult:
    """Every intermediate of the cross-section and rate chain."""
    nuc = scenario.projectile
    b = scenario.impact_parameter
    xi = adiabaticity(b, nuc.E_level, scenario.beam, const)
    n = equivalent_photon_number(scenario.foil_Z, scenario.beam, xi, const)
    sigma = coulex_cross_section(scenario, const)
    rate, fraction = _rate(scenario, sigma, const)
    density = areal_number_density(scenario.foil_areal_density, scenario.foil_A, const)
    return CoulexResult(b, xi, n, sigma, density, rate, fraction)
