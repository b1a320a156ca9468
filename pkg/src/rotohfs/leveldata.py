"""Reading, validating and writing heliumlike level schemes.

A scheme file is line oriented::

    # comment
    ion = U90+
    hfs_matrix_element_eV = -0.764
    hfs_matrix_element_g_r = 92/238

    [level]
    label = 2^3P_0
    binding_energy_eV = -96271.40
    decay = 2^3S_1, E1, 1.25e10, reconstructed
    decay = 1^1S_0, E1M1, 5.357142857142857e9, reconstructed

Keys before the first ``[level]`` are ion metadata. ``decay`` may repeat;
its optional fourth field is a provenance tag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .errors import ParseError, UnknownLevel, ValidationError

TRANSITION_TYPES = ("E1", "M1", "M2", "2E1", "E1M1", "2E1_or_E1M1")
PROVENANCE_TAGS = ("text", "reconstructed", "figure")
GROUND_LABEL = "1^1S_0"

_FLOAT_METADATA = ("hfs_matrix_element_eV", "hfs_matrix_element_g_r")


@dataclass(frozen=True)
class DecayChannel:
    destination: str
    kind: str
    rate: float  # 1/s
    provenance: Optional[str] = None


@dataclass(frozen=True)
class HeLikeLevel:
    label: str
    binding_energy: float  # eV
    decay_channels: Tuple[DecayChannel, ...] = ()
    provenance: Optional[str] = None

    @property
    def total_width(self) -> float:
        return math.fsum(ch.rate for ch in self.decay_channels)

    @property
    def lifetime(self) -> float:
        w = self.total_width
        return math.inf if w == 0 else 1.0 / w


@dataclass(frozen=True)
class LevelScheme:
    ion: str
    levels: Tuple[HeLikeLevel, ...]
    metadata: Dict[str, Union[float, str]] = field(default_factory=dict)

    def __post_init__(self):
        _validate(self)

    def __getitem__(self, label: str) -> HeLikeLevel:
        for lv in self.levels:
            if lv.label == label:
                return lv
        raise UnknownLevel(f"no level {label!r} in scheme {self.ion!r}")

    def __contains__(self, label: str) -> bool:
        return any(lv.label == label for lv in self.levels)

    @property
    def labels(self) -> List[str]:
        return [lv.label for lv in self.levels]

    def energy_difference(self, upper: str, lower: str) -> float:
        """E(upper) - E(lower) in eV, taken between the stored binding energies."""
        return self[upper].binding_energy - self[lower].binding_energy

    @property
    def hfs_matrix_element(self) -> Optional[float]:
        return self.metadata.get("hfs_matrix_element_eV")

    @property
    def hfs_matrix_element_g_r(self) -> Optional[float]:
        return self.metadata.get("hfs_matrix_element_g_r")


@dataclass(frozen=True)
class WidthBreakdown:
    label: str
    total: float  # 1/s
    fractions: Dict[Tuple[str, str], float]  # (destination, type) -> branching fraction

    @property
    def lifetime(self) -> float:
        return 1.0 / self.total


def _validate(scheme: LevelScheme) -> None:
    if not scheme.levels:
        raise ValidationError(f"scheme {scheme.ion!r} has no levels", "scheme contains at least one level")
    seen = set()
    for lv in scheme.levels:
        if lv.label in seen:
            raise ValidationError(f"duplicate level {lv.label!r}", "labels unique within a scheme")
        seen.add(lv.label)
        if not math.isfinite(lv.binding_energy):
            raise ValidationError(f"level {lv.label!r} binding energy {lv.binding_energy!r}", "finite energies")
    for lv in scheme.levels:
        for ch in lv.decay_channels:
            if not (ch.rate > 0 and math.isfinite(ch.rate)):
                raise ValidationError(f"{lv.label} -> {ch.destination} rate {ch.rate!r}", "rates positive")
            if ch.destination not in seen and ch.destination != GROUND_LABEL:
                raise ValidationError(
                    f"{lv.label} decays to unknown level {ch.destination!r}",
                    "every decay destination exists in the scheme or is the ground state",
                )
            if ch.kind not in TRANSITION_TYPES:
                raise ValidationError(f"transition type {ch.kind!r}", f"type in {TRANSITION_TYPES}")
        if lv.decay_channels:
            frac_sum = math.fsum(ch.rate / lv.total_width for ch in lv.decay_channels)
            if abs(frac_sum - 1.0) > 1e-9:
                raise ValidationError(f"{lv.label} branching sums to {frac_sum}", "branching fractions sum to 1")


def _parse_number(text: str, line: int, key: str) -> float:
    try:
        if "/" in text:
            return float(Fraction(text.strip()))
        return float(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a number, got {text!r}", line, key) from None


def parse_scheme(text: str) -> LevelScheme:
    """Parse the text of a level-scheme document."""
    metadata: Dict[str, Union[float, str]] = {}
    levels: List[HeLikeLevel] = []
    current: Optional[dict] = None

    def close():
        if current is None:
            return
        for req in ("label", "binding_energy_eV"):
            if req not in current:
                raise ParseError("level section missing required field", current["_line"], req)
        levels.append(
            HeLikeLevel(current["label"], current["binding_energy_eV"], tuple(current["decay"]), current.get("provenance"))
        )

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if line != "[level]":
                raise ParseError(f"unknown section {line!r}", lineno)
            close()
            current = {"_line": lineno, "decay": []}
            continue
        if "=" not in line:
            raise ParseError(f"expected 'key = value', got {line!r}", lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        if current is None:
            if key in metadata:
                raise ParseError("duplicate metadata key", lineno, key)
            metadata[key] = _parse_number(value, lineno, key) if key in _FLOAT_METADATA else value
        elif key == "label":
            current["label"] = value
        elif key == "binding_energy_eV":
            current["binding_energy_eV"] = _parse_number(value, lineno, key)
        elif key == "provenance":
            current["provenance"] = value
        elif key == "decay":
            parts = [p.strip() for p in value.split(",")]
            if len(parts) not in (3, 4):
                raise ParseError("decay needs 'destination, type, rate[, provenance]'", lineno, key)
            if parts[1] not in TRANSITION_TYPES:
                raise ParseError(f"unknown transition type {parts[1]!r}", lineno, key)
            prov = parts[3] if len(parts) == 4 else None
            if prov is not None and prov not in PROVENANCE_TAGS:
                raise ParseError(f"unknown provenance tag {prov!r}", lineno, key)
            current["decay"].append(DecayChannel(parts[0], parts[1], _parse_number(parts[2], lineno, key), prov))
        else:
            raise ParseError("unknown level field", lineno, key)
    close()
    ion = str(metadata.pop("ion", ""))
    if not ion:
        raise ParseError("missing ion metadata", None, "ion")
    return LevelScheme(ion, tuple(levels), metadata)


def load_scheme(source: Union[str, Path, None] = None) -> LevelScheme:
    """Load a scheme from a path, or the bundled U90+ scheme when ``source`` is None."""
    if source is None:
        text = resources.files("rotohfs").joinpath("data/u90.levels").read_text(encoding="utf-8")
    else:
        text = Path(source).read_text(encoding="utf-8")
    return parse_scheme(text)


def dump_scheme(scheme: LevelScheme) -> str:
    """Canonical serialization; ``parse_scheme(dump_scheme(s)) == s``."""
    out = [f"ion = {scheme.ion}"]
    for key in sorted(scheme.metadata):
        value = scheme.metadata[key]
        out.append(f"{key} = {value!r}" if isinstance(value, float) else f"{key} = {value}")
    for lv in scheme.levels:
        out += ["", "[level]", f"label = {lv.label}", f"binding_energy_eV = {lv.binding_energy!r}"]
        if lv.provenance:
            out.append(f"provenance = {lv.provenance}")
        for ch in lv.decay_channels:
            fields = [ch.destination, ch.kind, repr(ch.rate)] + ([ch.provenance] if ch.provenance else [])
            out.append("decay = " + ", ".join(fields))
    return "\n".join(out) + "\n"


def unquenched_width(scheme: LevelScheme, label: str) -> WidthBreakdown:
    """Total radiative width of ``label`` and the branching of its channels."""
    lv = scheme[label]
    total = lv.total_width
    fractions: Dict[Tuple[str, str], float] = {}
    if total == 0.0:
        raise ValidationError(f"level {label!r} has no decay channels", "width defined only for decaying levels")
    for ch in lv.decay_channels:
        key = (ch.destination, ch.kind)
        fractions[key] = fractions.get(key, 0.0) + ch.rate / total
    return WidthBreakdown(label, total, fractions)
