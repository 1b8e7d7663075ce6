"""Local characteristic decomposition for the 2D Euler equations.

Conventions
-----------
The eigenstructure for a sweep along one axis is expressed in terms of the
*normal* velocity ``un`` (u for an x-sweep, v for a y-sweep) and the
*transverse* velocity ``ut``.  With

    b2 = (gamma - 1) / c**2,      b1 = 0.5*(u*u + v*v) * b2,

the rows of the left matrix L (characteristic components, natural order
``un-c``, ``un``, ``un+c``, ``perp``) act on the conserved vector with the
normal momentum in slot 2 and the transverse momentum in slot 3:

    row(un-c) = ( 0.5*(b1 + un/c), -0.5*(1/c + b2*un), -0.5*b2*ut,  0.5*b2 )
    row(un)   = ( 1 - b1,           b2*un,              b2*ut,     -b2     )
    row(un+c) = ( 0.5*(b1 - un/c),  0.5*(1/c - b2*un), -0.5*b2*ut,  0.5*b2 )
    row(perp) = ( -ut,              0,                  1,          0      )

and the columns of the right matrix R are

    col(un-c) = (1, un - c, ut, h - un*c)
    col(un)   = (1, un,     ut, 0.5*(u*u + v*v))
    col(un+c) = (1, un + c, ut, h + un*c)
    col(perp) = (0, 0,      1,  ut)

again with slots 2/3 meaning normal/transverse momentum.  The y-sweep matrices
follow from the x-sweep ones by substituting (un, ut) = (v, u) and swapping the
momentum slots; since two-term floating-point addition is commutative, one code
path expressed in (normal, transverse) form reproduces both per-axis matrices
bit-for-bit.  That shared shape is what makes diagonally mirrored sweeps
byte-identical.

Summation orders (the load-bearing part)
----------------------------------------
* Forward projection groups the two momentum terms first in *both* ordering
  modes:  ``w = l1*rho + (l2*mn + l3*mt) + l4*E``.  The bracket makes the
  diagonal mirror exact; without it, the x- and y-sweeps would sum the same
  four terms in different orders.
* Backward projection depends on the ordering mode.  ``SYMMETRY_PRESERVING``
  sums the acoustic pair first:

      U = (col(un-c)*w1 + col(un+c)*w3) + col(un)*w2 + col(perp)*w4

  so that a mirror, which exchanges w1 and w3, only commutes a two-term sum.
  ``NATURAL`` sums left-to-right in eigenvalue order and is the deliberately
  order-sensitive baseline.

`CharacteristicQuad.w` stores the components in the frame's ordering: natural
mode keeps (un-c, un, un+c, perp); the symmetry-preserving mode moves the
acoustic pair to the front, (un-c, un+c, un, perp).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import sqrt

from .errors import ImaginarySoundSpeed, NonPositiveDensity
from .state import Axis, ConservedState, GasModel, PrimitiveState


class Ordering(Enum):
    NATURAL = "natural"
    SYMMETRY_PRESERVING = "symmetry-preserving"


@dataclass(frozen=True)
class InterfaceFrame:
    """Frozen decomposition frame built from a pair of states (or one state twice)."""

    u: float
    v: float
    h: float
    c: float
    b1: float
    b2: float
    axis: Axis
    ordering: Ordering
    left: PrimitiveState
    right: PrimitiveState


@dataclass(frozen=True)
class CharacteristicQuad:
    """Four characteristic components, laid out per the frame's ordering."""

    w: tuple[float, float, float, float]


def roe_average(rho_l: float, rho_r: float, q_l: float, q_r: float) -> float:
    """Density-weighted average (sqrt(rL)*qL + sqrt(rR)*qR) / (sqrt(rL) + sqrt(rR)).

    Evaluated exactly in that term order.  Swapping the two sides permutes both
    two-term sums, so mirrored inputs give the bit-identical average.
    """
    if rho_l <= 0.0:
        raise NonPositiveDensity(f"rho_l = {rho_l!r}")
    if rho_r <= 0.0:
        raise NonPositiveDensity(f"rho_r = {rho_r!r}")
    sl = sqrt(rho_l)
    sr = sqrt(rho_r)
    return (sl * q_l + sr * q_r) / (sl + sr)


def build_frame(
    left: PrimitiveState,
    h_left: float,
    right: PrimitiveState,
    h_right: float,
    axis: Axis,
    ordering: Ordering,
    gas: GasModel,
) -> InterfaceFrame:
    """Build the decomposition frame from two adjacent states.

    When the two inputs are exactly equal the averaged quantities are taken
    directly from the left state: the weighted-average formula does not return
    its input bit-exactly for every representable value (the division rounds),
    and downstream consumers rely on the equal-input identity.
    """
    if (
        left.rho == right.rho
        and left.u == right.u
        and left.v == right.v
        and h_left == h_right
    ):
        u, v, h = left.u, left.v, h_left
    else:
        u = roe_average(left.rho, right.rho, left.u, right.u)
        v = roe_average(left.rho, right.rho, left.v, right.v)
        h = roe_average(left.rho, right.rho, h_left, h_right)
    ke2 = 0.5 * (u * u + v * v)
    c2 = (gas.gamma - 1.0) * (h - ke2)
    if c2 <= 0.0:
        raise ImaginarySoundSpeed(f"c^2 = {c2!r}")
    c = sqrt(c2)
    b2 = (gas.gamma - 1.0) / c2
    b1 = ke2 * b2
    return InterfaceFrame(u, v, h, c, b1, b2, axis, ordering, left, right)


def frame_from_state(
    state: PrimitiveState, h: float, axis: Axis, ordering: Ordering, gas: GasModel
) -> InterfaceFrame:
    """Frame anchored on a single cell state (equal-input build_frame)."""
    return build_frame(state, h, state, h, axis, ordering, gas)


def _normal_transverse(frame: InterfaceFrame) -> tuple[float, float]:
    if frame.axis is Axis.X:
        return frame.u, frame.v
    return frame.v, frame.u


def project_to_characteristic(u: ConservedState, frame: InterfaceFrame) -> CharacteristicQuad:
    """Forward projection W = L . U with the momentum pair bracketed first."""
    un, ut = _normal_transverse(frame)
    if frame.axis is Axis.X:
        mn, mt = u.mx, u.my
    else:
        mn, mt = u.my, u.mx
    invc = 1.0 / frame.c
    b1 = frame.b1
    b2 = frame.b2

    l11 = 0.5 * (b1 + un * invc)
    l12 = -0.5 * (invc + b2 * un)
    l13 = -0.5 * (b2 * ut)
    l14 = 0.5 * b2
    l21 = 1.0 - b1
    l22 = b2 * un
    l23 = b2 * ut
    l24 = -b2
    l31 = 0.5 * (b1 - un * invc)
    l32 = 0.5 * (invc - b2 * un)

    w_minus = l11 * u.rho + (l12 * mn + l13 * mt) + l14 * u.energy
    w_zero = l21 * u.rho + (l22 * mn + l23 * mt) + l24 * u.energy
    w_plus = l31 * u.rho + (l32 * mn + l13 * mt) + l14 * u.energy
    w_perp = (-ut) * u.rho + mt

    if frame.ordering is Ordering.SYMMETRY_PRESERVING:
        return CharacteristicQuad((w_minus, w_plus, w_zero, w_perp))
    return CharacteristicQuad((w_minus, w_zero, w_plus, w_perp))


def project_to_conservative(quad: CharacteristicQuad, frame: InterfaceFrame) -> ConservedState:
    """Backward projection U = R . W; summation order depends on the mode."""
    un, ut = _normal_transverse(frame)
    c = frame.c
    h = frame.h
    ke2 = 0.5 * (frame.u * frame.u + frame.v * frame.v)
    umc = un - c
    upc = un + c
    hmc = h - un * c
    hpc = h + un * c

    if frame.ordering is Ordering.SYMMETRY_PRESERVING:
        w_minus, w_plus, w_zero, w_perp = quad.w
        rho = (w_minus + w_plus) + w_zero
        mn = (umc * w_minus + upc * w_plus) + un * w_zero
        mt = (ut * w_minus + ut * w_plus) + ut * w_zero + w_perp
        energy = (hmc * w_minus + hpc * w_plus) + ke2 * w_zero + ut * w_perp
    else:
        w_minus, w_zero, w_plus, w_perp = quad.w
        rho = w_minus + w_zero + w_plus
        mn = umc * w_minus + un * w_zero + upc * w_plus
        mt = ut * w_minus + ut * w_zero + ut * w_plus + w_perp
        energy = hmc * w_minus + ke2 * w_zero + hpc * w_plus + ut * w_perp

    if frame.axis is Axis.X:
        return ConservedState(rho, mn, mt, energy)
    return ConservedState(rho, mt, mn, energy)
