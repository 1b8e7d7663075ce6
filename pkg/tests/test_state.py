"""Conversions between conserved and primitive variables, and the exact flux.

The bitwise assertions here are the foundation everything else rests on: the
pressure must come out identical when the two velocity components are
exchanged, and the axis fluxes must be each other's diagonal images.
"""

import math

import pytest
from hypothesis import given, strategies as st

from symfv.errors import NonPositiveDensity, NonPositivePressure
from symfv.state import (
    Axis,
    ConservedState,
    GasModel,
    PrimitiveState,
    conserved_from_primitive,
    physical_flux,
    primitive_from_conserved,
    sound_speed,
)

from helpers import random_primitive

GAS = GasModel()

finite = st.floats(
    min_value=-8.0, max_value=8.0, allow_nan=False, allow_infinity=False
)
positive = st.floats(min_value=0.05, max_value=8.0, allow_nan=False, allow_infinity=False)


def test_rest_state_is_exact():
    # gamma - 1 is not representable, so the frozen values carry its rounding
    g = GAS.gamma - 1.0
    q = primitive_from_conserved(ConservedState(1.0, 0.0, 0.0, 2.5), GAS)
    assert q == PrimitiveState(1.0, 0.0, 0.0, g * 2.5)
    u = conserved_from_primitive(PrimitiveState(1.0, 0.0, 0.0, 1.0), GAS)
    assert u == ConservedState(1.0, 0.0, 0.0, 1.0 / g)
    assert u.energy == pytest.approx(2.5, rel=1e-15)


def test_round_trip_is_tight(rng):
    for _ in range(200):
        q = random_primitive(rng)
        back = primitive_from_conserved(conserved_from_primitive(q, GAS), GAS)
        assert back.rho == q.rho
        assert math.isclose(back.u, q.u, rel_tol=1e-13, abs_tol=1e-15)
        assert math.isclose(back.v, q.v, rel_tol=1e-13, abs_tol=1e-15)
        assert math.isclose(back.p, q.p, rel_tol=1e-13)


def test_sound_speed_matches_scalar_sqrt():
    assert sound_speed(PrimitiveState(1.0, 0.0, 0.0, 1.0), GAS) == math.sqrt(1.4)
    assert sound_speed(
        PrimitiveState(2.0, 0.0, 0.0, 1.0), GasModel(5.0 / 3.0)
    ) == math.sqrt((5.0 / 3.0) * 1.0 / 2.0)


def test_invalid_states_raise():
    with pytest.raises(NonPositiveDensity):
        primitive_from_conserved(ConservedState(0.0, 0.0, 0.0, 1.0), GAS)
    with pytest.raises(NonPositiveDensity):
        primitive_from_conserved(ConservedState(-1.0, 0.0, 0.0, 1.0), GAS)
    with pytest.raises(NonPositivePressure):
        # kinetic energy exceeds the total
        primitive_from_conserved(ConservedState(1.0, 2.0, 0.0, 1.0), GAS)
    with pytest.raises(NonPositiveDensity):
        conserved_from_primitive(PrimitiveState(0.0, 0.0, 0.0, 1.0), GAS)
    with pytest.raises(NonPositivePressure):
        conserved_from_primitive(PrimitiveState(1.0, 0.0, 0.0, 0.0), GAS)
    with pytest.raises(NonPositivePressure):
        sound_speed(PrimitiveState(1.0, 0.0, 0.0, -2.0), GAS)


@given(rho=positive, mx=finite, my=finite, extra=positive)
def test_pressure_is_bitwise_invariant_under_velocity_exchange(rho, mx, my, extra):
    """Exchanging the momentum slots must reproduce the pressure bit for bit."""
    energy = 0.5 * (mx * mx + my * my) / rho + extra
    q = primitive_from_conserved(ConservedState(rho, mx, my, energy), GAS)
    qs = primitive_from_conserved(ConservedState(rho, my, mx, energy), GAS)
    assert qs.p == q.p
    assert qs.u == q.v and qs.v == q.u


@given(rho=positive, mx=finite, my=finite, extra=positive)
def test_axis_fluxes_are_diagonal_images(rho, mx, my, extra):
    """F_y of the exchanged state equals the exchanged F_x, bit for bit."""
    energy = 0.5 * (mx * mx + my * my) / rho + extra
    u = ConservedState(rho, mx, my, energy)
    q = primitive_from_conserved(u, GAS)
    us = ConservedState(rho, my, mx, energy)
    qs = primitive_from_conserved(us, GAS)
    fx = physical_flux(q, u, Axis.X)
    fy = physical_flux(qs, us, Axis.Y)
    assert fy == ConservedState(fx.rho, fx.my, fx.mx, fx.energy)


def test_flux_values_on_a_simple_state():
    q = PrimitiveState(1.0, 3.0, 0.0, 1.0)
    u = conserved_from_primitive(q, GAS)
    fx = physical_flux(q, u, Axis.X)
    assert fx == ConservedState(3.0, 10.0, 0.0, 24.0)
    fy = physical_flux(q, u, Axis.Y)
    assert fy == ConservedState(0.0, 0.0, 1.0, 0.0)
