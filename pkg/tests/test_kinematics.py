import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rotohfs.errors import NegativeEnergy, NonPositiveInput
from rotohfs.kinematics import (
    BeamState,
    beam_from_kinetic,
    decay_length,
    proper_lifetime_from_length,
    survival_fraction,
)

U = 931.49410242
# tests/oracle.py: beam(320)
ORACLE_BETA_320 = 0.667839152653231518
ORACLE_GAMMA_320 = 1.34353411274279402


def test_320_mev():
    b = beam_from_kinetic(320)
    assert b.beta == pytest.approx(ORACLE_BETA_320, rel=1e-12)
    assert b.lorentz_gamma == pytest.approx(ORACLE_GAMMA_320, rel=1e-12)


def test_rest_and_exact():
    b = beam_from_kinetic(0)
    assert (b.beta, b.lorentz_gamma) == (0.0, 1.0)
    b = beam_from_kinetic(U)
    assert b.lorentz_gamma == 2.0
    assert b.beta == pytest.approx(math.sqrt(3) / 2, rel=1e-15)


def test_negative():
    with pytest.raises(NegativeEnergy):
        beam_from_kinetic(-1)


@given(st.floats(min_value=0, max_value=1e6), st.floats(min_value=1e-9, max_value=1e6))
def test_beta_increasing_bounded(e, de):
    lo, hi = beam_from_kinetic(e), beam_from_kinetic(e + de)
    assert hi.beta >= lo.beta
    assert hi.beta <= 1.0
    g = lo.lorentz_gamma
    # the naive form loses ~eps/beta to cancellation near rest
    assert lo.beta == pytest.approx(math.sqrt(1 - 1 / g**2), rel=1e-12, abs=1e-7)


def test_decay_lengths():
    beam = beam_from_kinetic(320)
    assert decay_length(0.67e-12, beam) == pytest.approx(0.18e-3, rel=0.01)
    assert decay_length(1.816e-7, beam) > 25
    assert decay_length(1.0, BeamState(0.0, 0.0, 1.0)) == 0.0
    with pytest.raises(NonPositiveInput):
        decay_length(0.0, beam)


@given(st.floats(min_value=1e-18, max_value=1.0), st.floats(min_value=1, max_value=2000))
def test_decay_length_round_trip(tau, e):
    beam = beam_from_kinetic(e)
    L = decay_length(tau, beam)
    assert proper_lifetime_from_length(L, beam) == pytest.approx(tau, rel=1e-12)
    assert decay_length(2 * tau, beam) == pytest.approx(2 * L, rel=1e-15)


def test_survival():
    assert survival_fraction(0.0, 1.8e-4) == 1.0
    assert survival_fraction(1.8e-4, 1.8e-4) == pytest.approx(math.exp(-1))
