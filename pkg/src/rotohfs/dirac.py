"""Relativistic one-electron quantum numbers and the point-nucleus
magnetic-dipole hyperfine constant in closed form.

The finite nuclear charge distribution enters only as a multiplicative
factor ``(1 - delta)`` with ``delta`` supplied by the caller.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .errors import InvalidState, SupercriticalCharge, ValidationError

_L_LETTERS = "spdfghik"


@dataclass(frozen=True)
class ElectronState:
    """Bound Dirac state labelled by ``n`` and ``kappa``.

    ``kappa = (l - j)(2j + 1)``: negative for j = l + 1/2, positive for
    j = l - 1/2.
    """

    n: int
    kappa: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise InvalidState(f"n must be a positive integer, got {self.n!r}")
        if int(self.kappa) != self.kappa or self.kappa == 0:
            raise InvalidState(f"kappa must be a nonzero integer, got {self.kappa!r}")
        if abs(self.kappa) > self.n:
            raise InvalidState(f"|kappa| = {abs(self.kappa)} exceeds n = {self.n}")
        if self.kappa == self.n:
            # n_r = 0 only exists for kappa < 0
            raise InvalidState(f"kappa = +n = {self.n} has no bound state")

    @property
    def j(self) -> Fraction:
        return Fraction(2 * abs(self.kappa) - 1, 2)

    @property
    def l(self) -> int:
        return -self.kappa - 1 if self.kappa < 0 else self.kappa

    @property
    def n_r(self) -> int:
        return self.n - abs(self.kappa)

    @property
    def label(self) -> str:
        return f"{self.n}{_L_LETTERS[self.l]}{self.j.numerator}/{self.j.denominator}"

    @classmethod
    def from_nlj(cls, n: int, l: int, j) -> "ElectronState":
        j = Fraction(j).limit_denominator(2)
        if j.denominator != 2 or abs(j - l) != Fraction(1, 2):
            raise InvalidState(f"j = {j} incompatible with l = {l}")
        kappa = (Fraction(l) - j) * (2 * j + 1)
        return cls(n, int(kappa))

    @classmethod
    def parse(cls, label: str) -> "ElectronState":
        """Parse spectroscopic labels such as ``1s1/2``, ``2p_3/2`` or ``2p3/2``."""
        m = re.fullmatch(r"\s*(\d+)\s*([a-z])\s*_?\s*(\d+)\s*/\s*2\s*", label)
        if not m or m.group(2) not in _L_LETTERS:
            raise InvalidState(f"cannot parse electron state {label!r}")
        n, letter, twoj = int(m.group(1)), m.group(2), int(m.group(3))
        return cls.from_nlj(n, _L_LETTERS.index(letter), Fraction(twoj, 2))


@dataclass(frozen=True)
class DiracAuxiliaries:
    gamma_d: float
    n_cap: float


@dataclass(frozen=True)
class FiniteSizeCorrection:
    delta: float = 0.0
    state: str = ""

    def __post_init__(self):
        if not 0.0 <= self.delta < 1.0:
            raise ValidationError(f"finite-size delta = {self.delta!r}", "0 <= delta < 1")


POINT_NUCLEUS = FiniteSizeCorrection(0.0)


def dirac_gamma(kappa: int, Z: float, const: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """sqrt(kappa^2 - (alpha Z)^2)."""
    az2 = (const.alpha * Z) ** 2
    if az2 >= kappa * kappa:
        raise SupercriticalCharge(f"(alpha Z)^2 = {az2:.6g} >= kappa^2 = {kappa * kappa} for Z = {Z}")
    return math.sqrt(kappa * kappa - az2)


def dirac_auxiliaries(
    state: ElectronState, Z: float, const: PhysicalConstants = DEFAULT_CONSTANTS
) -> DiracAuxiliaries:
    g = dirac_gamma(state.kappa, Z, const)
    nr = state.n_r
    if nr == 0:
        n_cap = float(abs(state.kappa))
    else:
        n_cap = math.sqrt(nr * (2.0 * g + nr) + state.kappa**2)
    return DiracAuxiliaries(g, n_cap)


def hfs_radial_factor(kappa: int, n_r: int, gamma_d: float) -> float:
    """Dimensionless state factor of the closed-form hfs constant,

    kappa [2 kappa (gamma + n_r) - N] / (j(j+1) N^4 gamma (4 gamma^2 - 1)).
    """
    j = abs(kappa) - 0.5
    n_cap = math.sqrt(n_r * (2.0 * gamma_d + n_r) + kappa * kappa)
    if n_r == 0:
        n_cap = float(abs(kappa))
    num = kappa * (2.0 * kappa * (gamma_d + n_r) - n_cap)
    den = j * (j + 1.0) * n_cap**4 * gamma_d * (4.0 * gamma_d**2 - 1.0)
    return num / den


def hfs_radial_factor_nodeless(kappa: int, gamma_d: float) -> float:
    """The ``n_r = 0`` reduction of :func:`hfs_radial_factor`,
    1 / (j(j+1) kappa^2 gamma (2 gamma + sign(kappa))).

    For kappa = -1 this is the familiar 4 / (3 gamma (2 gamma - 1)).
    """
    j = abs(kappa) - 0.5
    sign = 1.0 if kappa > 0 else -1.0
    return 1.0 / (j * (j + 1.0) * kappa * kappa * gamma_d * (2.0 * gamma_d + sign))


def hfs_constant(
    state: ElectronState,
    Z: float,
    g_r: float,
    fs: FiniteSizeCorrection = POINT_NUCLEUS,
    const: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Magnetic-dipole hfs constant ``a`` in eV for a rotor nucleus.

    a = alpha (alpha Z)^3 g_r (m_e^2/m_p) R(kappa, n_r, gamma) (1 - delta),
    with m_e^2/m_p read as m_e c^2 (m_e/m_p).

    Parameters
    ----------
    state : ElectronState
    Z : float
        Nuclear charge number.
    g_r : float
        Rotational gyromagnetic factor; ``a`` is linear in it.
    fs : FiniteSizeCorrection
        Fractional reduction from the extended nuclear charge.
    """
    aux = dirac_auxiliaries(state, Z, const)
    prefactor = const.alpha * (const.alpha * Z) ** 3 * g_r * const.electron_to_proton_energy
    return prefactor * hfs_radial_factor(state.kappa, state.n_r, aux.gamma_d) * (1.0 - fs.delta)


def mixing_bracket_hydrogenic(
    Z: float,
    delta_1s: float = 0.0,
    delta_2p: float = 0.0,
    const: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Hydrogenic 1s + 2p_1/2 radial bracket of the 2^3P_0 - 2^3P_1 hfs
    matrix element (dimensionless, gamma taken with kappa = -1).
    """
    for name, d in (("delta_1s", delta_1s), ("delta_2p", delta_2p)):
        if not 0.0 <= d < 1.0:
            raise ValidationError(f"{name} = {d!r}", "0 <= delta < 1")
    g = dirac_gamma(-1, Z, const)
    s = 2.0 * g + 2.0
    p_term = (s - math.sqrt(s)) / (s * s * g * (4.0 * g * g - 1.0)) * (1.0 - delta_2p)
    s_term = (1.0 - delta_1s) / (g * (2.0 * g - 1.0))
    return p_term - s_term
