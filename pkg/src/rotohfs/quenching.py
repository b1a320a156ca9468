"""Hyperfine quenching of the heliumlike 2^3P_0 level through its
admixture of 2^3P_1.

Widths are in 1/s, energies in eV, lifetimes in s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .dirac import mixing_bracket_hydrogenic
from .errors import UnphysicalLifetime, ValidationError, ZeroDenominator
from .leveldata import GROUND_LABEL, LevelScheme, unquenched_width

P0 = "2^3P_0"
P1 = "2^3P_1"


@dataclass(frozen=True)
class QuenchInput:
    """Everything the quenched lifetime depends on.

    ``matrix_element`` is <2^3P_0| sum_i H_hfs(r_i) |2^3P_1> evaluated for
    the rotational factor ``g_r``; it scales linearly with g_r.
    """

    matrix_element: float  # eV
    energy_denominator: float  # eV, E(2^3P_0) - E(2^3P_1)
    gamma_1: float  # E1 width of 2^3P_1
    unquenched_width_0: float
    g_r: float = 92 / 238

    def __post_init__(self):
        if self.energy_denominator == 0:
            raise ZeroDenominator("2^3P_0 and 2^3P_1 are degenerate")
        if not (self.gamma_1 > 0 and self.unquenched_width_0 > 0):
            raise ValidationError("widths must be positive", "widths > 0")

    def with_g_r(self, g_r: float) -> "QuenchInput":
        """Same ion with the matrix element rescaled to a different g_r."""
        if self.g_r == 0:
            raise ValidationError("cannot rescale from g_r = 0")
        return replace(self, matrix_element=self.matrix_element * g_r / self.g_r, g_r=g_r)


@dataclass(frozen=True)
class QuenchResult:
    eta: float
    gamma_0_induced: float
    total_width: float
    lifetime: float
    unquenched_lifetime: float
    g_r_sensitivity: float  # d(lifetime)/d(g_r), s


def mixing_coefficient(me: float, denom: float) -> float:
    """First-order admixture amplitude me / denom (signed)."""
    if denom == 0:
        raise ZeroDenominator("energy denominator is zero")
    return me / denom


def quench(inp: QuenchInput) -> QuenchResult:
    """Lifetime of 2^3P_0 once the induced E1 width eta^2 Gamma_1 is added."""
    eta = mixing_coefficient(inp.matrix_element, inp.energy_denominator)
    induced = eta * eta * inp.gamma_1
    total = inp.unquenched_width_0 + induced
    # induced ~ g_r^2  =>  d(1/total)/dg = -2 induced / (g total^2)
    if inp.g_r != 0:
        sensitivity = -2.0 * induced / (inp.g_r * total * total)
    else:
        sensitivity = 0.0
    return QuenchResult(eta, induced, total, 1.0 / total, 1.0 / inp.unquenched_width_0, sensitivity)


def lifetime_at(inp: QuenchInput, g_r: float) -> float:
    return quench(inp.with_g_r(g_r)).lifetime


def matrix_element_hydrogenic(
    Z: float,
    I: float,
    g_r: float,
    delta_1s: float = 0.0,
    delta_2p: float = 0.0,
    const: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Hydrogenic estimate (eV) of the 2^3P_0 - 2^3P_1 hfs matrix element.

    Built from unscreened 1s and 2p_1/2 Dirac orbitals, so it is an estimate
    only; quantitative work should use the many-electron value.
    """
    bracket = mixing_bracket_hydrogenic(Z, delta_1s, delta_2p, const)
    prefactor = g_r * const.alpha * (const.alpha * Z) ** 3 * math.sqrt(I * (I + 1)) * const.electron_to_proton_energy
    return prefactor * bracket


def g_r_from_lifetime(measured_lifetime: float, inp: QuenchInput) -> float:
    """Invert the quenched lifetime for the rotational g factor.

    Uses Gamma_induced(g) = (g / g_ref)^2 Gamma_induced(g_ref); returns the
    positive root.
    """
    if not measured_lifetime > 0:
        raise UnphysicalLifetime(f"lifetime must be positive, got {measured_lifetime!r}")
    excess = 1.0 / measured_lifetime - inp.unquenched_width_0
    if excess <= 0:
        raise UnphysicalLifetime(
            f"measured lifetime {measured_lifetime:.4g} s is not shorter than the "
            f"unquenched {1.0 / inp.unquenched_width_0:.4g} s"
        )
    ref = quench(inp).gamma_0_induced
    if ref == 0:
        raise UnphysicalLifetime("reference inputs give no quenching; g_r cannot be inferred")
    return inp.g_r * math.sqrt(excess / ref)


def _e1_to_ground(scheme: LevelScheme) -> float:
    rate = math.fsum(
        ch.rate for ch in scheme[P1].decay_channels if ch.kind == "E1" and ch.destination == GROUND_LABEL
    )
    if rate == 0:
        raise ValidationError(f"scheme {scheme.ion!r} has no {P1} -> {GROUND_LABEL} E1 channel")
    return rate


def quench_input_from_scheme(scheme: LevelScheme, g_r: float = None, matrix_element: float = None) -> QuenchInput:
    """Assemble a :class:`QuenchInput` from a level scheme.

    The stored matrix element belongs to the scheme's reference g_r and is
    rescaled linearly when ``g_r`` differs. ``matrix_element`` overrides the
    stored value (it is then taken to belong to ``g_r``).
    """
    g_ref = scheme.hfs_matrix_element_g_r
    if g_ref is None:
        g_ref = 92 / 238
    if matrix_element is None:
        matrix_element = scheme.hfs_matrix_element
        if matrix_element is None:
            raise ValidationError(f"scheme {scheme.ion!r} carries no hfs matrix element")
    else:
        g_ref = g_r if g_r is not None else g_ref
    inp = QuenchInput(
        matrix_element=matrix_element,
        energy_denominator=scheme.energy_difference(P0, P1),
        gamma_1=_e1_to_ground(scheme),
        unquenched_width_0=unquenched_width(scheme, P0).total,
        g_r=g_ref,
    )
    if g_r is not None and g_r != g_ref:
        if g_ref == 0:
            raise ValidationError("reference g_r is zero")
        inp = inp.with_g_r(g_r)
    return inp
