"""Physical constants and unit conversions.

Values are CODATA 2018. Energies are in eV unless the field name says
otherwise; ``hbar_c`` is in MeV fm because nuclear-scale formulas want it
that way.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Mapping

from .errors import IncompatibleUnits, NonPositiveInput, ValidationError

_CONSISTENCY_RTOL = 1e-9


@dataclass(frozen=True)
class PhysicalConstants:
    fine_structure_alpha: float = 7.2973525693e-3
    electron_mass_energy: float = 510998.95  # eV
    proton_electron_mass_ratio: float = 1836.15267343
    hbar: float = 6.582119569e-16  # eV s
    speed_of_light: float = 299792458.0  # m/s
    hbar_c: float = 197.3269804  # MeV fm
    atomic_mass_unit_energy: float = 931.49410242  # MeV
    avogadro: float = 6.02214076e23  # 1/mol
    hc_wavelength_factor: float = 1239.84198433  # eV nm

    def __post_init__(self):
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ValidationError(f"constant {f.name} = {value!r}", "all values strictly positive")
        # hbar [eV s] * c [m/s] -> eV m; 1 eV m = 1e9 MeV fm
        hbar_c = self.hbar * self.speed_of_light * 1e9
        if not math.isclose(hbar_c, self.hbar_c, rel_tol=_CONSISTENCY_RTOL):
            raise ValidationError(
                f"hbar_c = {self.hbar_c} MeV fm but hbar*c = {hbar_c} MeV fm",
                "hbar_c == hbar * speed_of_light",
            )
        # MeV fm -> eV nm is a factor 1e6 * 1e-6 = 1
        hc = 2.0 * math.pi * self.hbar_c
        if not math.isclose(hc, self.hc_wavelength_factor, rel_tol=_CONSISTENCY_RTOL):
            raise ValidationError(
                f"hc_wavelength_factor = {self.hc_wavelength_factor} eV nm but 2 pi hbar_c = {hc}",
                "hc_wavelength_factor == 2 pi hbar_c",
            )

    @property
    def alpha(self) -> float:
        return self.fine_structure_alpha

    @property
    def e_squared(self) -> float:
        """Elementary charge squared in MeV fm (Gaussian units, e^2 = alpha hbar c)."""
        return self.fine_structure_alpha * self.hbar_c

    @property
    def electron_to_proton_energy(self) -> float:
        """m_e^2/m_p expressed as an energy, m_e c^2 (m_e/m_p), in eV."""
        return self.electron_mass_energy / self.proton_electron_mass_ratio

    def replace(self, **overrides) -> "PhysicalConstants":
        """Copy with some values replaced.

        Overriding ``hbar`` or ``speed_of_light`` recomputes ``hbar_c`` and
        ``hc_wavelength_factor`` unless those are given too, so the
        consistency invariants keep holding.
        """
        unknown = set(overrides) - {f.name for f in dataclasses.fields(self)}
        if unknown:
            raise ValidationError(f"unknown constant(s): {', '.join(sorted(unknown))}")
        values = dataclasses.asdict(self)
        values.update({k: float(v) for k, v in overrides.items()})
        if ("hbar" in overrides or "speed_of_light" in overrides) and "hbar_c" not in overrides:
            values["hbar_c"] = values["hbar"] * values["speed_of_light"] * 1e9
        if "hc_wavelength_factor" not in overrides:
            values["hc_wavelength_factor"] = 2.0 * math.pi * values["hbar_c"]
        return PhysicalConstants(**values)

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, object]) -> "PhysicalConstants":
        """Build from a ``[constants]`` config section (string values allowed)."""
        try:
            overrides = {k: float(v) for k, v in mapping.items()}
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"non-numeric constant override: {exc}") from None
        return DEFAULT_CONSTANTS.replace(**overrides)


DEFAULT_CONSTANTS = PhysicalConstants()


# unit tag -> (dimension, magnitude in the dimension's base unit)
# base units: eV, s, m, m^2, e^2 m^4, m^-2, s^-1
_UNITS = {
    "eV": ("energy", 1.0),
    "keV": ("energy", 1e3),
    "MeV": ("energy", 1e6),
    "s": ("time", 1.0),
    "ns": ("time", 1e-9),
    "ps": ("time", 1e-12),
    "fs": ("time", 1e-15),
    "m": ("length", 1.0),
    "mm": ("length", 1e-3),
    "um": ("length", 1e-6),
    "nm": ("length", 1e-9),
    "fm": ("length", 1e-15),
    "fm2": ("area", 1e-30),
    "barn": ("area", 1e-28),
    "cm2": ("area", 1e-4),
    "e2fm4": ("e2_area2", 1e-60),
    "e2b2": ("e2_area2", 1e-56),
    "cm-2": ("areal_density", 1e4),
    "m-2": ("areal_density", 1.0),
    "s-1": ("rate", 1.0),
    "1": ("dimensionless", 1.0),
}

_ALIASES = {
    "µm": "um",
    "μm": "um",
    "fm²": "fm2",
    "fm^2": "fm2",
    "b": "barn",
    "cm²": "cm2",
    "cm^2": "cm2",
    "e²·fm⁴": "e2fm4",
    "e^2 fm^4": "e2fm4",
    "e²·barn²": "e2b2",
    "e²b²": "e2b2",
    "e^2 b^2": "e2b2",
    "cm⁻²": "cm-2",
    "cm^-2": "cm-2",
    "s⁻¹": "s-1",
    "s^-1": "s-1",
    "1/s": "s-1",
    "dimensionless": "1",
    "": "1",
}


def canonical_unit(unit: str) -> str:
    tag = _ALIASES.get(unit, unit)
    if tag not in _UNITS:
        raise IncompatibleUnits(f"unknown unit {unit!r}")
    return tag


def unit_dimension(unit: str) -> str:
    return _UNITS[canonical_unit(unit)][0]


@dataclass(frozen=True)
class Quantity:
    value: float
    unit: str

    def __post_init__(self):
        object.__setattr__(self, "unit", canonical_unit(self.unit))

    def to(self, unit: str) -> "Quantity":
        return convert(self, unit)

    def __str__(self):
        return f"{self.value:g} {self.unit}"


def convert(q: Quantity, target_unit: str) -> Quantity:
    """Rescale ``q`` into ``target_unit``.

    Raises
    ------
    IncompatibleUnits
        If the two units measure different dimensions.
    """
    target = canonical_unit(target_unit)
    dim_from, scale_from = _UNITS[q.unit]
    dim_to, scale_to = _UNITS[target]
    if dim_from != dim_to:
        raise IncompatibleUnits(f"cannot convert {q.unit} ({dim_from}) to {target} ({dim_to})")
    if q.unit == target:
        return Quantity(q.value, target)
    return Quantity(q.value * (scale_from / scale_to), target)


def width_from_lifetime(tau: float) -> float:
    """Decay rate in 1/s for a lifetime in s."""
    if not tau > 0:
        raise NonPositiveInput(f"lifetime must be positive, got {tau!r}")
    return 1.0 / tau


def lifetime_from_width(width: float) -> float:
    """Lifetime in s for a decay rate in 1/s."""
    if not width > 0:
        raise NonPositiveInput(f"width must be positive, got {width!r}")
    return 1.0 / width
