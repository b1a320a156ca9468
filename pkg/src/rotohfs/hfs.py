"""Magnetic-dipole hyperfine level structure of a one-electron ion."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .dirac import POINT_NUCLEUS, ElectronState, FiniteSizeCorrection, dirac_auxiliaries, hfs_constant
from .errors import InvalidSpin
from .rotor import RotorNucleus


def as_spin(x) -> Fraction:
    """Coerce an integer or half-integer (int, float, str, Fraction) to a Fraction."""
    s = Fraction(x).limit_denominator(2) if not isinstance(x, str) else Fraction(x)
    if s < 0 or (2 * s).denominator != 1 or abs(float(s) - float(Fraction(x))) > 1e-12:
        raise InvalidSpin(f"{x!r} is not a non-negative integer or half-integer")
    return s


def cosine_factor(F, I, j) -> Fraction:
    """C = F(F+1) - I(I+1) - j(j+1), exact."""
    F, I, j = Fraction(F), Fraction(I), Fraction(j)
    return F * (F + 1) - I * (I + 1) - j * (j + 1)


@dataclass(frozen=True)
class HfsLevel:
    F: Fraction
    C: Fraction
    shift: float  # eV, relative to the unsplit level


@dataclass(frozen=True)
class HfsResult:
    a: float
    I: Fraction
    j: Fraction
    levels: Tuple[HfsLevel, ...]
    doublet_splitting: float
    photon_wavelength: Optional[float]  # um; None when nothing splits

    def level(self, F) -> HfsLevel:
        F = Fraction(F)
        for lv in self.levels:
            if lv.F == F:
                return lv
        raise KeyError(F)


def lande_shifts(a: float, I, j, const: PhysicalConstants = DEFAULT_CONSTANTS) -> HfsResult:
    """Split a level of electron angular momentum ``j`` by a nucleus of spin ``I``.

    Each F in |I-j| .. I+j is shifted by C a / 2. ``doublet_splitting`` is
    the gap between the outermost F levels, which for j = 1/2 is (I + 1/2) a.
    The wavelength (um) is that of a photon with energy |doublet_splitting|.
    """
    I, j = as_spin(I), as_spin(j)
    F_min, F_max = abs(I - j), I + j
    levels: List[HfsLevel] = []
    F = F_min
    while F <= F_max:
        C = cosine_factor(F, I, j)
        levels.append(HfsLevel(F, C, float(C) * a / 2.0))
        F += 1
    splitting = levels[-1].shift - levels[0].shift
    wavelength = None
    if splitting != 0.0:
        wavelength = const.hc_wavelength_factor / abs(splitting) * 1e-3  # eV nm / eV -> um
    return HfsResult(a, I, j, tuple(levels), splitting, wavelength)


def hfs_for_ion(
    nuc: RotorNucleus,
    state: ElectronState,
    fs: FiniteSizeCorrection = POINT_NUCLEUS,
    const: PhysicalConstants = DEFAULT_CONSTANTS,
) -> HfsResult:
    """Hyperfine structure of ``state`` around a rotor nucleus in its band level ``nuc.I``."""
    a = hfs_constant(state, nuc.Z, nuc.g_r, fs, const)
    return lande_shifts(a, nuc.I, state.j, const)


def hfs_intermediates(nuc: RotorNucleus, state: ElectronState, const: PhysicalConstants = DEFAULT_CONSTANTS) -> dict:
    aux = dirac_auxiliaries(state, nuc.Z, const)
    return {"gamma_d": aux.gamma_d, "n_cap": aux.n_cap, "n_r": state.n_r, "kappa": state.kappa, "g_r": nuc.g_r}
