"""Ideal-gas state vectors and the flux function.

Conserved storage is (rho, rho*u, rho*v, E) with E the total energy per unit
volume.  Primitive storage is (rho, u, v, p).  All conversions here are written
with a fixed floating-point evaluation order; other modules rely on these exact
shapes, so do not "simplify" the arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import sqrt

from .errors import NonPositiveDensity, NonPositivePressure


class Axis(Enum):
    """Sweep direction for dimension-wise operators."""

    X = "x"
    Y = "y"


class Variant(Enum):
    """Scheme-wide switch between the conventional and the mirror-exact forms.

    ``ORIGINAL`` keeps the textbook evaluation order of every formula.
    ``SYMMETRIC`` uses the reordered forms whose floating-point result is
    invariant under mirror reflection of the input data.
    """

    ORIGINAL = "original"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class GasModel:
    """Calorically perfect gas, p = (gamma - 1) * (E - kinetic)."""

    gamma: float = 1.4


@dataclass(frozen=True)
class ConservedState:
    rho: float
    mx: float
    my: float
    energy: float


@dataclass(frozen=True)
class PrimitiveState:
    rho: float
    u: float
    v: float
    p: float


def primitive_from_conserved(state: ConservedState, gas: GasModel) -> PrimitiveState:
    """Convert conserved to primitive variables.

    The kinetic energy is evaluated as ``0.5*rho*(u*u + v*v)`` -- the two
    squared velocities are summed as a commutative pair, so exchanging u and v
    (a diagonal mirror) reproduces the identical pressure bit-for-bit.
    """
    if state.rho <= 0.0:
        raise NonPositiveDensity(f"rho = {state.rho!r}")
    u = state.mx / state.rho
    v = state.my / state.rho
    ke = 0.5 * state.rho * (u * u + v * v)
    p = (gas.gamma - 1.0) * (state.energy - ke)
    if p <= 0.0:
        raise NonPositivePressure(f"p = {p!r}")
    return PrimitiveState(state.rho, u, v, p)


def conserved_from_primitive(state: PrimitiveState, gas: GasModel) -> ConservedState:
    """Convert primitive to conserved variables (inverse evaluation shape)."""
    if state.rho <= 0.0:
        raise NonPositiveDensity(f"rho = {state.rho!r}")
    if state.p <= 0.0:
        raise NonPositivePressure(f"p = {state.p!r}")
    ke = 0.5 * state.rho * (state.u * state.u + state.v * state.v)
    energy = state.p / (gas.gamma - 1.0) + ke
    return ConservedState(state.rho, state.rho * state.u, state.rho * state.v, energy)


def sound_speed(state: PrimitiveState, gas: GasModel) -> float:
    """c = sqrt(gamma * p / rho)."""
    if state.rho <= 0.0:
        raise NonPositiveDensity(f"rho = {state.rho!r}")
    if state.p <= 0.0:
        raise NonPositivePressure(f"p = {state.p!r}")
    return sqrt(gas.gamma * state.p / state.rho)


def physical_flux(q: PrimitiveState, u: ConservedState, axis: Axis) -> ConservedState:
    """Exact Euler flux along one axis, from matched primitive/conserved states.

    The transverse-momentum component multiplies the *stored* transverse
    momentum by the normal velocity: the x-flux carries ``my * u`` and the
    y-flux carries ``mx * v``.  Under the diagonal exchange (u <-> v,
    mx <-> my) those two expressions are the same multiplication in the same
    order, which is what keeps the dimension-wise fluxes diagonally consistent
    at the bit level.
    """
    if axis is Axis.X:
        return ConservedState(
            u.mx,
            u.mx * q.u + q.p,
            u.my * q.u,
            (u.energy + q.p) * q.u,
        )
    return ConservedState(
        u.my,
        u.mx * q.v,
        u.my * q.v + q.p,
        (u.energy + q.p) * q.v,
    )
