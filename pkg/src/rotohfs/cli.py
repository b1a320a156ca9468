"""Command-line front end.

    rotohfs hfs|quench|coulex|decay-curve [--scenario PATH] [--levels PATH]
            [--format text|structured|csv] [--g-r X] [--point-nucleus]
            [--scan-g-r A:B:N] [--measured-lifetime S]

Exit codes: 0 success, 1 runtime error, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence

from . import __version__
from .coulex import evaluate as evaluate_coulex
from .errors import InputValidationError, ValidationError
from .hfs import hfs_for_ion
from .dirac import dirac_auxiliaries
from .kinematics import decay_length, survival_fraction
from .leveldata import load_scheme
from .quenching import (
    g_r_from_lifetime,
    lifetime_at,
    matrix_element_hydrogenic,
    quench,
    quench_input_from_scheme,
)
from .rotor import e2_lifetime, rotation_period, rotor_magnetic_moment
from .scenario import Scenario, load_scenario

TEXT_DIGITS = 4

# units as they appear in structured keys
_KEY_UNIT = {
    "eV": "eV",
    "keV": "keV",
    "MeV/u": "MeV_per_u",
    "s": "s",
    "m": "m",
    "mm": "mm",
    "um": "um",
    "fm": "fm",
    "fm^2": "fm2",
    "cm^-2": "per_cm2",
    "1/s": "per_s",
    "ions/s": "ions_per_s",
    "mu_N": "muN",
    "": "",
}


@dataclass
class Entry:
    key: str
    label: str
    value: float
    unit: str = ""  # empty means dimensionless

    @property
    def structured_key(self) -> str:
        suffix = _KEY_UNIT[self.unit]
        return f"{self.key}_{suffix}" if suffix else self.key


@dataclass
class Report:
    title: str
    entries: List[Entry]
    notes: List[str]

    def add(self, key, label, value, unit=""):
        self.entries.append(Entry(key, label, float(value), unit))

    def as_text(self) -> str:
        width = max(len(e.label) for e in self.entries)
        lines = [self.title, "-" * len(self.title)]
        for e in self.entries:
            unit = e.unit or "(dimensionless)"
            lines.append(f"{e.label:<{width}}  {format_sig(e.value)} {unit}")
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines) + "\n"

    def as_structured(self) -> str:
        doc = {e.structured_key: e.value for e in self.entries}
        return json.dumps(doc, sort_keys=True, indent=1, allow_nan=False) + "\n"

    def as_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value", "unit"])
        for e in self.entries:
            w.writerow([e.key, repr(e.value), e.unit or "1"])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        return {"text": self.as_text, "structured": self.as_structured, "csv": self.as_csv}[fmt]()


def format_sig(x: float, digits: int = TEXT_DIGITS) -> str:
    if x == 0 or not math.isfinite(x):
        return f"{x:g}" if x != 0 else "0"
    return f"{x:.{digits}g}" if 1e-3 <= abs(x) < 1e5 else f"{x:.{digits - 1}e}"


def _fraction_tag(F) -> str:
    return f"{F.numerator}_{F.denominator}" if F.denominator != 1 else str(F.numerator)


def _scenario_from_args(args) -> Scenario:
    sc = load_scenario(args.scenario)
    if args.g_r is not None:
        if args.g_r < 0:
            raise ValidationError(f"--g-r {args.g_r}", "g_r >= 0")
        sc = sc.with_g_r(args.g_r)
    if args.point_nucleus:
        sc = replace(sc, delta=0.0, delta_1s=0.0, delta_2p=0.0)
    if getattr(args, "levels", None):
        sc = replace(sc, levels_path=args.levels)
    return sc


def hfs_report(sc: Scenario) -> Report:
    const = sc.constants
    nuc, st = sc.nucleus, sc.state
    res = hfs_for_ion(nuc, st, sc.finite_size, const)
    aux = dirac_auxiliaries(st, nuc.Z, const)
    rep = Report(f"Hyperfine structure of {st.label} around Z={nuc.Z} A={nuc.A}, I={nuc.I}", [], [])
    rep.add("hfs.gamma_d", "Dirac gamma", aux.gamma_d)
    rep.add("hfs.n_cap", "apparent principal number N", aux.n_cap)
    rep.add("hfs.g_r", "rotational g factor", nuc.g_r)
    rep.add("hfs.delta", "finite-size correction", sc.delta)
    rep.add("hfs.a", "hfs constant a", res.a, "eV")
    for lv in res.levels:
        tag = _fraction_tag(lv.F)
        rep.add(f"hfs.level_F{tag}.C", f"cosine factor C (F={lv.F})", float(lv.C))
        rep.add(f"hfs.level_F{tag}.shift", f"shift (F={lv.F})", lv.shift, "eV")
    rep.add("hfs.doublet_splitting", "hfs splitting", res.doublet_splitting, "eV")
    if res.photon_wavelength is not None:
        rep.add("hfs.wavelength", "transition wavelength", res.photon_wavelength, "um")
    rep.add("nucleus.magnetic_moment", "rotor magnetic moment", rotor_magnetic_moment(nuc), "mu_N")
    if nuc.rot_const is not None:
        rep.add("nucleus.rot_const", "rotational constant", nuc.rot_const, "keV")
        rep.add("nucleus.rotation_period", "rotation period", rotation_period(nuc.rot_const, nuc.E_level, const), "s")
        rep.add("nucleus.e2_lifetime", "E2 radiative lifetime", e2_lifetime(nuc.B_E2_up, nuc.E_level, nuc.I, const), "s")
    rep.notes.append("shifts are relative to the unsplit level; its absolute Lamb shift "
                     "(theory 464.7 +- 1.0 eV, experiment 470 +- 16 eV) is not computed here")
    return rep


def _quench_input(sc: Scenario):
    scheme = load_scheme(sc.levels_path)
    return quench_input_from_scheme(scheme, g_r=sc.nucleus.g_r, matrix_element=sc.matrix_element)


def quench_report(sc: Scenario, measured_lifetime: Optional[float] = None) -> Report:
    const = sc.constants
    inp = _quench_input(sc)
    res = quench(inp)
    beam = sc.beam
    rep = Report("Hyperfine quenching of 2^3P_0", [], [])
    rep.add("quench.g_r", "rotational g factor", inp.g_r)
    rep.add("quench.matrix_element", "hfs matrix element (level data)", inp.matrix_element, "eV")
    rep.add("quench.energy_denominator", "E(2^3P_0) - E(2^3P_1)", inp.energy_denominator, "eV")
    rep.add("quench.eta", "mixing coefficient eta", res.eta)
    rep.add("quench.gamma_1", "2^3P_1 E1 width", inp.gamma_1, "1/s")
    rep.add("quench.unquenched_width", "2^3P_0 unquenched width", inp.unquenched_width_0, "1/s")
    rep.add("quench.unquenched_lifetime", "2^3P_0 unquenched lifetime", res.unquenched_lifetime, "s")
    rep.add("quench.gamma_0_induced", "induced E1 width", res.gamma_0_induced, "1/s")
    rep.add("quench.total_width", "quenched total width", res.total_width, "1/s")
    rep.add("quench.lifetime", "quenched lifetime", res.lifetime, "s")
    rep.add("quench.g_r_sensitivity", "d(lifetime)/d(g_r)", res.g_r_sensitivity, "s")
    rep.add("quench.decay_length", "lab decay length", decay_length(res.lifetime, beam, const), "m")
    rep.add("beam.beta", "beam beta", beam.beta)
    hyd = matrix_element_hydrogenic(sc.nucleus.Z, sc.nucleus.I, inp.g_r, sc.delta_1s, sc.delta_2p, const)
    rep.add("quench.matrix_element_hydrogenic_estimate", "hfs matrix element, hydrogenic (estimate)", hyd, "eV")
    rep.notes.append("the hydrogenic matrix element is an unscreened estimate; all other numbers use the level data")
    if measured_lifetime is not None:
        rep.add("quench.measured_lifetime", "measured lifetime", measured_lifetime, "s")
        rep.add("quench.g_r_from_measured", "g_r from measured lifetime", g_r_from_lifetime(measured_lifetime, inp))
    return rep


def coulex_report(sc: Scenario) -> Report:
    const = sc.constants
    cs = sc.coulex()
    res = evaluate_coulex(cs, const)
    nuc = sc.nucleus
    rep = Report(f"Coulomb excitation of the {nuc.I}+ level, Z={nuc.Z} on Z_f={sc.foil_Z}", [], [])
    rep.add("beam.kinetic_energy", "beam kinetic energy", sc.kinetic_energy, "MeV/u")
    rep.add("beam.beta", "beam beta", cs.beam.beta)
    rep.add("beam.lorentz_gamma", "beam Lorentz gamma", cs.beam.lorentz_gamma)
    rep.add("coulex.b_min", "minimum impact parameter", res.b_min, "fm")
    rep.add("coulex.xi", "adiabaticity xi", res.xi)
    rep.add("coulex.n_e2", "E2 equivalent photon number", res.n_e2)
    rep.add("coulex.sigma", "excitation cross section", res.sigma, "fm^2")
    rep.add("coulex.areal_density", "foil areal density", res.areal_density, "cm^-2")
    rep.add("coulex.rate", "excited ions", res.rate, "ions/s")
    rep.add("coulex.fraction", "excited fraction of beam", res.fraction)
    tau = e2_lifetime(nuc.B_E2_up, nuc.E_level, nuc.I, const)
    rep.add("nucleus.e2_lifetime", "E2 radiative lifetime", tau, "s")
    rep.add("nucleus.decay_length", "nuclear lab decay length", decay_length(tau, cs.beam, const), "m")
    return rep


def _parse_scan(spec: str):
    try:
        a, b, n = spec.split(":")
        a, b, n = float(a), float(b), int(n)
    except ValueError:
        raise ValidationError(f"--scan-g-r {spec!r} is not a:b:n") from None
    if n < 2 or not (0 < a < b):
        raise ValidationError(f"--scan-g-r {spec!r}", "0 < a < b and n >= 2")
    return [a + (b - a) * i / (n - 1) for i in range(n)]


def scan_csv(sc: Scenario, spec: str) -> str:
    inp = _quench_input(sc)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["g_r", "lifetime_s", "decay_length_m"])
    for g in _parse_scan(spec):
        tau = lifetime_at(inp, g)
        w.writerow([repr(g), repr(tau), repr(decay_length(tau, sc.beam, sc.constants))])
    return buf.getvalue()


def decay_curve_csv(sc: Scenario, z_max: float, steps: int) -> str:
    """Survival of the 2^3P_0 and nuclear 2+ populations along the beam."""
    if not z_max > 0:
        raise ValidationError(f"--z-max {z_max}", "z_max > 0")
    if steps < 2:
        raise ValidationError(f"--steps {steps}", "steps >= 2")
    const, beam, nuc = sc.constants, sc.beam, sc.nucleus
    l_atomic = decay_length(quench(_quench_input(sc)).lifetime, beam, const)
    l_nuclear = decay_length(e2_lifetime(nuc.B_E2_up, nuc.E_level, nuc.I, const), beam, const)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["z_m", "fraction_2_3P_0", "fraction_nuclear_2plus"])
    for i in range(steps):
        z = z_max * i / (steps - 1)
        w.writerow([repr(z), repr(survival_fraction(z, l_atomic)), repr(survival_fraction(z, l_nuclear))])
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", help="scenario INI file (default: bundled 238U scenario)")
    common.add_argument("--levels", help="level-scheme file (default: bundled U90+ scheme)")
    common.add_argument("--format", choices=("text", "structured", "csv"), default="text")
    common.add_argument("--g-r", type=float, dest="g_r", help="override the rotational g factor")
    common.add_argument("--point-nucleus", action="store_true", help="set all finite-size corrections to zero")

    p = argparse.ArgumentParser(prog="rotohfs", description=__doc__.splitlines()[0] if __doc__ else None)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("hfs", parents=[common], help="hyperfine structure of the one-electron ion")
    q = sub.add_parser("quench", parents=[common], help="hyperfine-quenched 2^3P_0 lifetime")
    q.add_argument("--scan-g-r", dest="scan_g_r", metavar="A:B:N", help="CSV of lifetime vs g_r")
    q.add_argument("--measured-lifetime", dest="measured_lifetime", type=float, metavar="S",
                   help="infer g_r from a measured lifetime in seconds")
    sub.add_parser("coulex", parents=[common], help="Coulomb excitation rate in the foil")
    d = sub.add_parser("decay-curve", parents=[common], help="CSV of surviving fractions along the beam")
    d.add_argument("--z-max", dest="z_max", type=float, default=1e-3, help="last flight distance in m")
    d.add_argument("--steps", type=int, default=101)
    return p


def run(args) -> str:
    sc = _scenario_from_args(args)
    if args.command == "hfs":
        return hfs_report(sc).render(args.format)
    if args.command == "quench":
        if args.scan_g_r:
            return scan_csv(sc, args.scan_g_r)
        return quench_report(sc, args.measured_lifetime).render(args.format)
    if args.command == "coulex":
        return coulex_report(sc).render(args.format)
    if args.command == "decay-curve":
        return decay_curve_csv(sc, args.z_max, args.steps)
    raise AssertionError(args.command)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            out = run(args)
    except InputValidationError as exc:
        print(f"rotohfs: invalid input: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"rotohfs: error: {exc}", file=sys.stderr)
        return 1
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
