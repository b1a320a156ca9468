from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rotohfs.constants import DEFAULT_CONSTANTS
from rotohfs.dirac import ElectronState, FiniteSizeCorrection
from rotohfs.errors import InvalidSpin
from rotohfs.hfs import as_spin, cosine_factor, hfs_for_ion, lande_shifts
from rotohfs.rotor import RotorNucleus

U238 = RotorNucleus(92, 238)
S12 = ElectronState(1, -1)
HALF_SPINS = [Fraction(k, 2) for k in range(10)]  # 0 .. 9/2


def test_doublet_u238():
    res = lande_shifts(0.72, 2, 0.5)
    assert [lv.F for lv in res.levels] == [Fraction(3, 2), Fraction(5, 2)]
    assert res.doublet_splitting == pytest.approx(1.8)
    assert res.photon_wavelength == pytest.approx(0.689, abs=1e-3)


def test_single_level_without_spin():
    for j in (0.5, 1.5, 2.5):
        res = lande_shifts(1.0, 0, j)
        assert len(res.levels) == 1
        assert res.levels[0].shift == 0.0
        assert res.doublet_splitting == 0.0
        assert res.photon_wavelength is None


@pytest.mark.parametrize("I", HALF_SPINS)
@pytest.mark.parametrize("j", HALF_SPINS)
def test_center_of_gravity(I, j):
    res = lande_shifts(3.7, I, j)
    assert len(res.levels) == 2 * min(I, j) + 1
    assert sum((2 * lv.F + 1) * lv.C for lv in res.levels) == 0  # exact
    assert abs(sum(float(2 * lv.F + 1) * lv.shift for lv in res.levels)) < 1e-12 * max(1, float(I * j) ** 2)


@given(st.sampled_from(HALF_SPINS[1:]), st.floats(min_value=-10, max_value=10))
def test_j_half_splitting(I, a):
    res = lande_shifts(a, I, Fraction(1, 2))
    assert res.doublet_splitting == pytest.approx((float(I) + 0.5) * a, rel=1e-15, abs=1e-300)


def test_wavelength_identity():
    res = lande_shifts(0.5, 3, 0.5)
    assert res.photon_wavelength * 1e3 * res.doublet_splitting == pytest.approx(
        DEFAULT_CONSTANTS.hc_wavelength_factor, rel=1e-9
    )


def test_cosine_factor():
    assert cosine_factor(Fraction(5, 2), 2, Fraction(1, 2)) == 2
    assert cosine_factor(Fraction(3, 2), 2, Fraction(1, 2)) == -3


@pytest.mark.parametrize("bad", [-1, 0.3, "1/3"])
def test_bad_spin(bad):
    with pytest.raises(InvalidSpin):
        as_spin(bad)


def test_hfs_for_ion():
    ext = hfs_for_ion(U238, S12, FiniteSizeCorrection(0.19))
    assert ext.doublet_splitting == pytest.approx(1.8, rel=0.01)
    point = hfs_for_ion(U238, S12)
    # 2.5 * 0.886133 eV
    assert point.doublet_splitting == pytest.approx(2.5 * 0.88613307225027341, rel=1e-9)
    assert hfs_for_ion(RotorNucleus(92, 238, I=0), S12).doublet_splitting == 0.0


def test_splitting_linear_in_g_r():
    base = hfs_for_ion(U238, S12).doublet_splitting
    for factor in (0.5, 2.0, 3.3):
        nuc = RotorNucleus(92, 238, g_r=U238.g_r * factor)
        assert hfs_for_ion(nuc, S12).doublet_splitting == pytest.approx(base * factor, rel=1e-12)


def test_levels_sorted_ascending():
    res = lande_shifts(1.0, 3, Fraction(5, 2))
    Fs = [lv.F for lv in res.levels]
    assert Fs == sorted(Fs)
