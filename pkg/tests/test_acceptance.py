"""Exit criteria: golden numbers for U-238 and the property suite.

Each test logs one PASS/FAIL line, collected in the terminal summary.
"""

import itertools
import json
import math
from dataclasses import replace
from fractions import Fraction

import pytest

from rotohfs.cli import main
from rotohfs.constants import _UNITS, DEFAULT_CONSTANTS, Quantity, convert, unit_dimension
from rotohfs.coulex import CoulexScenario, areal_number_density, coulex_cross_section, equivalent_photon_number, evaluate
from rotohfs.dirac import (
    ElectronState,
    FiniteSizeCorrection,
    dirac_gamma,
    hfs_constant,
    hfs_radial_factor,
    hfs_radial_factor_nodeless,
)
from rotohfs.hfs import hfs_for_ion, lande_shifts
from rotohfs.kinematics import beam_from_kinetic, decay_length
from rotohfs.leveldata import load_scheme, unquenched_width
from rotohfs.quenching import g_r_from_lifetime, lifetime_at, mixing_coefficient, quench, quench_input_from_scheme
from rotohfs.rotor import RotorNucleus, e2_lifetime, rotation_period, rotational_constant_from_level
from rotohfs.scenario import load_scenario

Z, A = 92, 238
G_R = Z / A
S12 = ElectronState(1, -1)
U238 = RotorNucleus(Z, A, I=2, E_level=44.91, B_E2_up=12.3)
BEAM = beam_from_kinetic(320)


def check(log, cid, name, ok, detail):
    log.append(f"C{cid:02d} {'PASS' if ok else 'FAIL'}  {name}: {detail}")
    assert ok, f"criterion {cid} ({name}) failed: {detail}"


def rel_check(log, cid, name, value, target, rtol, unit=""):
    err = abs(value / target - 1)
    detail = f"{value:.5g} {unit} vs {target:g} {unit}, rel err {err:.2%} (tol {rtol:.1%})"
    check(log, cid, name, err <= rtol, detail)


# ---- golden numbers ------------------------------------------------------


def test_c01_hfs_constant_point(acceptance_log):
    a = hfs_constant(S12, Z, G_R)
    rel_check(acceptance_log, 1, "hfs constant, point nucleus", a, 0.89, 0.01, "eV")


def test_c02_hfs_constant_extended(acceptance_log):
    a = hfs_constant(S12, Z, G_R, FiniteSizeCorrection(0.19))
    rel_check(acceptance_log, 2, "hfs constant, delta_1s = 0.19", a, 0.72, 0.01, "eV")


def test_c03_doublet_and_wavelength(acceptance_log):
    res = hfs_for_ion(U238, S12, FiniteSizeCorrection(0.19))
    e_err = abs(res.doublet_splitting / 1.8 - 1)
    l_err = abs(res.photon_wavelength / 0.69 - 1)
    detail = (
        f"splitting {res.doublet_splitting:.5g} eV (rel err {e_err:.2%}), "
        f"wavelength {res.photon_wavelength:.5g} um (rel err {l_err:.2%}), tol 1%"
    )
    check(acceptance_log, 3, "doublet splitting and wavelength", e_err <= 0.01 and l_err <= 0.01, detail)


def test_c04_rotational_constant(acceptance_log):
    rel_check(acceptance_log, 4, "rotational constant", rotational_constant_from_level(44.91, 2), 7.5, 0.01, "keV")


def test_c05_rotation_period(acceptance_log):
    tau_fs = rotation_period(rotational_constant_from_level(44.91, 2), 44.91) * 1e15
    ok = 0.5e-4 <= tau_fs <= 2e-4
    check(acceptance_log, 5, "rotation period", ok, f"{tau_fs:.4g} fs vs 1e-4 fs (within factor 2)")


def test_c06_e2_lifetime(acceptance_log):
    tau_ns = e2_lifetime(12.3, 44.91, 2) * 1e9
    ok = 50 <= tau_ns <= 500
    check(acceptance_log, 6, "2+ E2 lifetime", ok, f"{tau_ns:.4g} ns vs [0.5, 5] x 1e2 ns")


def test_c07_mixing_coefficient(acceptance_log):
    scheme = load_scheme()
    eta = mixing_coefficient(-0.764, scheme.energy_difference("2^3P_0", "2^3P_1"))
    rel_check(acceptance_log, 7, "mixing coefficient eta", eta, 0.696e-2, 0.01)


def test_c08_induced_width(acceptance_log):
    res = quench(quench_input_from_scheme(load_scheme()))
    rel_check(acceptance_log, 8, "induced E1 width", res.gamma_0_induced, 0.147e13, 0.01, "1/s")


def test_c09_quenched_lifetime(acceptance_log):
    res = quench(quench_input_from_scheme(load_scheme()))
    rel_check(acceptance_log, 9, "quenched 2^3P_0 lifetime", res.lifetime * 1e12, 0.67, 0.02, "ps")


def test_c10_decay_length(acceptance_log):
    res = quench(quench_input_from_scheme(load_scheme()))
    L = decay_length(res.lifetime, BEAM) * 1e3
    rel_check(acceptance_log, 10, "2^3P_0 lab decay length", L, 0.18, 0.03, "mm")


def test_c11_beta(acceptance_log):
    rel_check(acceptance_log, 11, "beam beta at 320 MeV/u", BEAM.beta, 0.67, 0.005)


def test_c12_adiabaticity(acceptance_log):
    res = evaluate(CoulexScenario(U238, BEAM))
    rel_check(acceptance_log, 12, "adiabaticity xi", res.xi, 2.6e-3, 0.03)


def test_c13_cross_section(acceptance_log):
    # composed from the bundled first inputs, nothing overridden
    sigma = coulex_cross_section(load_scenario().coulex())
    rel_check(acceptance_log, 13, "Coulomb excitation cross section", sigma, 10.7, 0.03, "fm^2")


def test_c14_areal_density(acceptance_log):
    rel_check(acceptance_log, 14, "carbon foil areal density", areal_number_density(1.0, 12), 0.5e20, 0.01, "cm^-2")


def test_c15_excitation_rate(acceptance_log):
    res = evaluate(load_scenario().coulex())
    r_err = abs(res.rate / 0.5e5 - 1)
    f_err = abs(res.fraction / 0.5e-5 - 1)
    detail = (
        f"n_i {res.rate:.4g} /s (rel err {r_err:.2%}), fraction {res.fraction:.4g} "
        f"(rel err {f_err:.2%}), tol 5%"
    )
    check(acceptance_log, 15, "excited-ion rate and fraction", r_err <= 0.05 and f_err <= 0.05, detail)


def test_c16_nuclear_decay_length(acceptance_log):
    L = decay_length(e2_lifetime(12.3, 44.91, 2), BEAM)
    check(acceptance_log, 16, "nuclear 2+ lab decay length", L > 25, f"{L:.4g} m vs > 25 m")


def test_consistency_unquenched_lifetime(acceptance_log):
    tau = unquenched_width(load_scheme(), "2^3P_0").lifetime
    err = abs(tau / 56e-12 - 1)
    check(acceptance_log, 0, "level data: 1/sum rates(2^3P_0) = 56 ps", err <= 0.02, f"{tau * 1e12:.4g} ps (tol 2%)")


# ---- property suite ------------------------------------------------------


def test_c17_center_of_gravity(acceptance_log):
    spins = [Fraction(k, 2) for k in range(10)]
    worst = 0.0
    for I, j in itertools.product(spins, spins):
        for a in (-10.0, -3.3, -1e-3, 0.0, 0.72, 10.0):
            res = lande_shifts(a, I, j)
            worst = max(worst, abs(math.fsum(float(2 * lv.F + 1) * lv.shift for lv in res.levels)))
    check(acceptance_log, 17, "center of gravity, I, j <= 9/2, |a| <= 10 eV", worst <= 1e-12, f"max |sum| = {worst:.2e} eV (tol 1e-12)")


def test_c18_quadratic_and_inversion(acceptance_log):
    base = quench_input_from_scheme(load_scheme())
    grid = [k / 200 for k in range(1, 201)]
    quad = max(
        abs(quench(base.with_g_r(2 * g)).gamma_0_induced / (4 * quench(base.with_g_r(g)).gamma_0_induced) - 1)
        for g in grid
    )
    trip = max(abs(g_r_from_lifetime(lifetime_at(base, g), base) / g - 1) for g in grid + [1e-4, 1e-3])
    ok = quad <= 1e-12 and trip <= 1e-9
    check(acceptance_log, 18, "Gamma_0 ~ g_r^2 and g_r round trip", ok, f"quadratic dev {quad:.1e}, round trip {trip:.1e} (tol 1e-9)")


def test_c19_general_vs_nodeless(acceptance_log):
    worst = 0.0
    for kappa in (-1, -2, 1):
        for Zi in range(1, 101):
            g = dirac_gamma(kappa, Zi)
            worst = max(worst, abs(hfs_radial_factor(kappa, 0, g) / hfs_radial_factor_nodeless(kappa, g) - 1))
    # and through the public API for the bound 1s and 2p3/2 states
    c = DEFAULT_CONSTANTS
    for state in (S12, ElectronState(2, -2)):
        for Zi in range(1, 101):
            g = dirac_gamma(state.kappa, Zi)
            pref = c.alpha * (c.alpha * Zi) ** 3 * G_R * c.electron_to_proton_energy
            simple = pref * hfs_radial_factor_nodeless(state.kappa, g)
            worst = max(worst, abs(hfs_constant(state, Zi, G_R) / simple - 1))
    check(acceptance_log, 19, "general form == n_r = 0 form", worst <= 1e-12, f"max rel dev {worst:.1e} (tol 1e-12)")


def test_c20_units_and_determinism(acceptance_log, capsys):
    worst = 0.0
    for a, b in itertools.product(_UNITS, repeat=2):
        if unit_dimension(a) != unit_dimension(b):
            continue
        for v in (1e-20, 0.67, 44.91, 12.3, 3.7e19):
            worst = max(worst, abs(convert(convert(Quantity(v, a), b), a).value / v - 1))
    outputs = []
    for _ in range(3):
        for cmd in ("hfs", "quench", "coulex"):
            assert main([cmd, "--format", "structured"]) == 0
        outputs.append(capsys.readouterr().out)
    same = all(o == outputs[0] for o in outputs)
    json.loads(outputs[0].split("}\n", 1)[0] + "}")
    check(acceptance_log, 20, "unit round trips and byte-identical output", worst <= 1e-12 and same,
          f"max round-trip dev {worst:.1e} (tol 1e-12), identical output: {same}")


def test_c21_coulex_scalings(acceptance_log):
    sc = CoulexScenario(U238, BEAM)
    s0 = coulex_cross_section(sc)
    devs = [
        coulex_cross_section(replace(sc, foil_Z=2 * sc.foil_Z)) / (4 * s0),
        coulex_cross_section(replace(sc, projectile=replace(U238, B_E2_up=2 * U238.B_E2_up))) / (2 * s0),
    ]
    n = equivalent_photon_number(6, BEAM, 2.6e-3)
    devs.append(equivalent_photon_number(6, BEAM, 5.2e-3) / (n / 4))
    worst = max(abs(d - 1) for d in devs)
    check(acceptance_log, 21, "Z_f^2, B(E2) and xi^-2 scalings", worst <= 1e-9, f"max rel dev {worst:.1e} (tol 1e-9)")
