"""Scenario files: INI documents describing nucleus, electron state, beam and foil."""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .coulex import R0_DEFAULT, CoulexScenario
from .dirac import ElectronState, FiniteSizeCorrection
from .errors import ParseError, ValidationError
from .kinematics import BeamState, beam_from_kinetic
from .rotor import RotorNucleus

_KNOWN = {
    "nucleus": {"Z", "A", "I", "E_level_keV", "B_E2_up_e2b2", "g_r", "Omega", "mu_prime", "rot_const_keV"},
    "electron": {"state", "n", "kappa", "delta", "delta_1s", "delta_2p"},
    "beam": {"kinetic_energy_MeV_per_u", "intensity_per_s"},
    "foil": {"Z", "A", "areal_density_mg_cm2"},
    "coulex": {"r0_fm", "b_min_fm"},
    "quench": {"levels", "matrix_element_eV"},
    "constants": None,
}


@dataclass(frozen=True)
class Scenario:
    nucleus: RotorNucleus
    state: ElectronState
    delta: float = 0.0
    delta_1s: float = 0.0
    delta_2p: float = 0.0
    kinetic_energy: float = 320.0  # MeV/u
    beam_intensity: float = 1e10
    foil_Z: int = 6
    foil_A: float = 12
    foil_areal_density: float = 1.0  # mg/cm^2
    r0: float = R0_DEFAULT
    b_min: Optional[float] = None
    levels_path: Optional[Path] = None
    matrix_element: Optional[float] = None
    constants: PhysicalConstants = field(default=DEFAULT_CONSTANTS)

    @property
    def finite_size(self) -> FiniteSizeCorrection:
        return FiniteSizeCorrection(self.delta, self.state.label)

    @property
    def beam(self) -> BeamState:
        return beam_from_kinetic(self.kinetic_energy, self.constants)

    def coulex(self) -> CoulexScenario:
        return CoulexScenario(
            projectile=self.nucleus,
            beam=self.beam,
            foil_Z=self.foil_Z,
            foil_A=self.foil_A,
            foil_areal_density=self.foil_areal_density,
            beam_intensity=self.beam_intensity,
            r0=self.r0,
            b_min=self.b_min,
        )

    def with_g_r(self, g_r: float) -> "Scenario":
        return replace(self, nucleus=replace(self.nucleus, g_r=g_r))


def _get(section, key, conv, default=None):
    if key not in section:
        return default
    raw = section[key].strip()
    try:
        return conv(raw)
    except ValueError:
        raise ParseError(f"bad value {raw!r} in [{section.name}]", None, key) from None


def parse_scenario(text: str, base_dir: Optional[Path] = None) -> Scenario:
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    cp.optionxform = str  # keys are case sensitive (Z vs z)
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ParseError(f"scenario does not parse: {exc}") from None
    for name in cp.sections():
        if name not in _KNOWN:
            raise ParseError(f"unknown section [{name}]")
        allowed = _KNOWN[name]
        if allowed is not None:
            for key in cp[name]:
                if key not in allowed:
                    raise ParseError(f"unknown key in [{name}]", None, key)
    sec = {name: cp[name] if cp.has_section(name) else {} for name in _KNOWN}

    const = DEFAULT_CONSTANTS
    if cp.has_section("constants") and len(cp["constants"]):
        const = PhysicalConstants.from_mapping(dict(cp["constants"]))

    nuc_sec = cp["nucleus"] if cp.has_section("nucleus") else None
    if nuc_sec is None:
        raise ValidationError("scenario has no [nucleus] section")
    try:
        nucleus = RotorNucleus(
            Z=_get(nuc_sec, "Z", int),
            A=_get(nuc_sec, "A", int),
            I=_get(nuc_sec, "I", int, 2),
            E_level=_get(nuc_sec, "E_level_keV", float, 44.91),
            B_E2_up=_get(nuc_sec, "B_E2_up_e2b2", float, 12.3),
            g_r=_get(nuc_sec, "g_r", float),
            Omega=_get(nuc_sec, "Omega", float, 0),
            mu_prime=_get(nuc_sec, "mu_prime", float, 0.0),
            rot_const=_get(nuc_sec, "rot_const_keV", float),
        )
    except TypeError:
        raise ValidationError("[nucleus] needs Z and A") from None

    el = sec["electron"]
    if el and "state" in el:
        state = ElectronState.parse(el["state"])
    elif el and "n" in el:
        state = ElectronState(_get(el, "n", int), _get(el, "kappa", int))
    else:
        state = ElectronState(1, -1)

    beam, foil, cx, qu = sec["beam"], sec["foil"], sec["coulex"], sec["quench"]
    levels = _get(qu, "levels", Path) if qu else None
    if levels is not None and not levels.is_absolute() and base_dir is not None:
        levels = base_dir / levels
    return Scenario(
        nucleus=nucleus,
        state=state,
        delta=_get(el, "delta", float, 0.0) if el else 0.0,
        delta_1s=_get(el, "delta_1s", float, 0.0) if el else 0.0,
        delta_2p=_get(el, "delta_2p", float, 0.0) if el else 0.0,
        kinetic_energy=_get(beam, "kinetic_energy_MeV_per_u", float, 320.0) if beam else 320.0,
        beam_intensity=_get(beam, "intensity_per_s", float, 1e10) if beam else 1e10,
        foil_Z=_get(foil, "Z", int, 6) if foil else 6,
        foil_A=_get(foil, "A", float, 12.0) if foil else 12.0,
        foil_areal_density=_get(foil, "areal_density_mg_cm2", float, 1.0) if foil else 1.0,
        r0=_get(cx, "r0_fm", float, R0_DEFAULT) if cx else R0_DEFAULT,
        b_min=_get(cx, "b_min_fm", float) if cx else None,
        levels_path=levels,
        matrix_element=_get(qu, "matrix_element_eV", float) if qu else None,
        constants=const,
    )


def load_scenario(source: Union[str, Path, None] = None) -> Scenario:
    """Read a scenario file, or the bundled 238U scenario when ``source`` is None."""
    if source is None:
        text = resources.files("rotohfs").joinpath("data/u238_default.ini").read_text(encoding="utf-8")
        return parse_scenario(text)
    path = Path(source)
    return parse_scenario(path.read_text(encoding="utf-8"), path.parent)
