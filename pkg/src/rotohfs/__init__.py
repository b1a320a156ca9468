"""Hyperfine structure and hyperfine quenching in highly charged ions whose
nucleus sits in an excited rotational level, with the Coulomb-excitation and
beam-kinematics estimates for a beam-foil measurement.
"""

__version__ = "0.1.0"

from .constants import DEFAULT_CONSTANTS, PhysicalConstants, Quantity, convert
from .coulex import CoulexScenario, coulex_cross_section, excitation_rate
from .dirac import ElectronState, FiniteSizeCorrection, hfs_constant
from .hfs import HfsResult, hfs_for_ion, lande_shifts
from .kinematics import BeamState, beam_from_kinetic, decay_length
from .leveldata import LevelScheme, load_scheme
from .quenching import QuenchInput, QuenchResult, quench
from .rotor import RotorNucleus

__all__ = [
    "DEFAULT_CONSTANTS",
    "PhysicalConstants",
    "Quantity",
    "convert",
    "CoulexScenario",
    "coulex_cross_section",
    "excitation_rate",
    "ElectronState",
    "FiniteSizeCorrection",
    "hfs_constant",
    "HfsResult",
    "hfs_for_ion",
    "lande_shifts",
    "BeamState",
    "beam_from_kinetic",
    "decay_length",
    "LevelScheme",
    "load_scheme",
    "QuenchInput",
    "QuenchResult",
    "quench",
    "RotorNucleus",
]
