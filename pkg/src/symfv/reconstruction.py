"""Candidate reconstructions and the two-stage selection between them.

Three candidates produce left/right boundary values for a cell from its
neighbourhood: an unlimited degree-4 polynomial (P4, 5-cell stencil) and two
hyperbolic-tangent profiles (THINC, 3-cell stencil) with steepness beta_s=1.1
(gentle) and beta_l=1.6 (sharp).  A two-stage comparison of total boundary
variation (TBV) picks one candidate per cell per component.

Every operation exists in an ``ORIGINAL`` and a ``SYMMETRIC`` variant.  The
symmetric variants are arranged so that reversing a stencil exchanges the two
boundary values bit-exactly (the stencil-flip condition, SF) and negating a
stencil negates them bit-exactly (the sign-inversion condition, SI).  The
original variants intentionally keep the conventional formulas, which violate
SF/SI at the last bit for some inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from math import cosh, exp, tanh
from typing import Callable, Sequence

from .errors import WindowTooSmall
from .state import Variant

BETA_S = 1.1
BETA_L = 1.6

# Per-beta constants, computed once so every call shares the same values.
_TANH_BS = tanh(BETA_S)
_COSH_BS = cosh(BETA_S)
_TANH_BL = tanh(BETA_L)
_COSH_BL = cosh(BETA_L)
_T1_BS = tanh(0.5 * BETA_S)
_T1_BL = tanh(0.5 * BETA_L)

_MONOTONE_EPS = 1e-20


class SelectionLabel(IntEnum):
    """Which candidate a cell ended up using (stable on-disk encoding)."""

    P4 = 0
    TS = 1
    TL = 2


class CheckMode(Enum):
    SF = "stencil-flip"
    SI = "sign-inversion"


@dataclass(frozen=True)
class Stencil5:
    q: tuple[float, float, float, float, float]


@dataclass(frozen=True)
class CandidateValues:
    """Boundary-value pairs (right-face value, left-face value) per candidate."""

    p4: tuple[float, float]
    ts: tuple[float, float]
    tl: tuple[float, float]


@dataclass(frozen=True)
class ReconWindow:
    """Ten consecutive cell averages centred on a target interface.

    With cells numbered 0..9 the target interface sits between cells 4 and 5.
    """

    q: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.q) != 10:
            raise WindowTooSmall(f"window needs 10 cells, got {len(self.q)}")


def p4_boundary_values(s: Sequence[float], variant: Variant) -> tuple[float, float]:
    """Degree-4 polynomial boundary values (value at i+1/2, value at i-1/2).

    The right-face value sums its five terms left-to-right with ascending cell
    index.  The symmetric variant evaluates the left-face value with the term
    order reversed, so a flipped stencil walks through the identical sequence
    of additions; the original variant uses ascending order for both faces.
    """
    s0, s1, s2, s3, s4 = s[0], s[1], s[2], s[3], s[4]
    q_right = (2.0 * s0 - 13.0 * s1 + 47.0 * s2 + 27.0 * s3 - 3.0 * s4) / 60.0
    if variant is Variant.SYMMETRIC:
        q_left = (2.0 * s4 - 13.0 * s3 + 47.0 * s2 + 27.0 * s1 - 3.0 * s0) / 60.0
    else:
        q_left = (-3.0 * s0 + 27.0 * s1 + 47.0 * s2 - 13.0 * s3 + 2.0 * s4) / 60.0
    return q_right, q_left


def thinc_boundary_values_original(
    qm: float, qc: float, qp: float, beta: float
) -> tuple[float, float]:
    """Conventional THINC closed form with the 1e-20 regularisation.

    Falls back to the piecewise constant (qc, qc) unless the triple is
    strictly monotone.  The min-based anchoring and the epsilon inside alpha
    are the two spots that break SF/SI at the last bit.
    """
    if not (qc - qm) * (qp - qc) > 0.0:
        return qc, qc
    if beta == BETA_S:
        tanh_b, cosh_b = _TANH_BS, _COSH_BS
    elif beta == BETA_L:
        tanh_b, cosh_b = _TANH_BL, _COSH_BL
    else:
        tanh_b, cosh_b = tanh(beta), cosh(beta)
    qmin = qm if qm < qp else qp
    dq = abs(qp - qm)
    theta = 1.0 if qp > qm else -1.0
    alpha = theta * (2.0 * ((qc - qmin + 1e-20) / (dq + 1e-20)) - 1.0)
    a = (exp(alpha * beta) / cosh_b - 1.0) / tanh_b
    q_right = qmin + 0.5 * dq * (1.0 + theta * ((tanh_b + a) / (1.0 + a * tanh_b)))
    q_left = qmin + 0.5 * dq * (1.0 + theta * a)
    return q_right, q_left


def thinc_boundary_values_symmetric(
    qm: float, qc: float, qp: float, beta: float
) -> tuple[float, float]:
    """THINC anchored on the neighbour midpoint, exact under SF and SI.

    q_a and q_d are the mean and half-difference of the outer neighbours;
    reversing the triple negates q_d and alpha while negating the triple
    negates q_a and qc - every building block transforms exactly, and tanh of
    an exactly-negated argument is exactly negated on IEEE libms.
    """
    if not (qc - qm) * (qp - qc) > _MONOTONE_EPS:
        return qc, qc
    t1 = _T1_BS if beta == BETA_S else (_T1_BL if beta == BETA_L else tanh(0.5 * beta))
    qa = 0.5 * (qp + qm)
    qd = 0.5 * (qp - qm)
    alpha = (qc - qa) / qd
    t2 = tanh(0.5 * (alpha * beta))
    ratio = t2 / t1
    q_right = qa + qd * ((t1 + ratio) / (1.0 + t2))
    q_left = qa - qd * ((t1 - ratio) / (1.0 - t2))
    return q_right, q_left


def sf_si_check(
    reconstruct: Callable[..., tuple[float, float]],
    s: Sequence[float],
    mode: CheckMode,
) -> bool:
    """Test the stencil-flip / sign-inversion identity for one stencil.

    ``reconstruct`` takes the unpacked stencil values and returns the pair
    (value at the right face, value at the left face).
    """
    right, left = reconstruct(*s)
    if mode is CheckMode.SF:
        flipped_right, flipped_left = reconstruct(*reversed(list(s)))
        return right == flipped_left and left == flipped_right
    neg_right, neg_left = reconstruct(*[-q for q in s])
    return right == -neg_right and left == -neg_left


def tbv(
    left_face: tuple[float, float], right_face: tuple[float, float]
) -> float:
    """Total boundary variation of one cell.

    Each argument is the (left-side value, right-side value) pair at one of the
    cell's two faces, all four values computed with the same candidate on cells
    i-1, i, i+1.  The two-term sum commutes, so mirrored inputs agree exactly.
    """
    return abs(left_face[0] - left_face[1]) + abs(right_face[0] - right_face[1])


def _candidates(
    w: Sequence[float], idx: int, variant: Variant
) -> tuple[tuple[float, float], tuple[float, float], tuple[float, float]]:
    """(right-face, left-face) pairs for P4 / THINC(beta_s) / THINC(beta_l)."""
    p4 = p4_boundary_values(w[idx - 2 : idx + 3], variant)
    if variant is Variant.SYMMETRIC:
        ts = thinc_boundary_values_symmetric(w[idx - 1], w[idx], w[idx + 1], BETA_S)
        tl = thinc_boundary_values_symmetric(w[idx - 1], w[idx], w[idx + 1], BETA_L)
    else:
        ts = thinc_boundary_values_original(w[idx - 1], w[idx], w[idx + 1], BETA_S)
        tl = thinc_boundary_values_original(w[idx - 1], w[idx], w[idx + 1], BETA_L)
    return p4, ts, tl


def candidate_values(w: Sequence[float], idx: int, variant: Variant) -> CandidateValues:
    """All three candidates for the cell at position ``idx`` of a window."""
    p4, ts, tl = _candidates(w, idx, variant)
    return CandidateValues(p4=p4, ts=ts, tl=tl)


def bvd_select(
    window: ReconWindow, variant: Variant
) -> tuple[float, float, SelectionLabel, SelectionLabel]:
    """Two-stage selection at the central interface of a 10-cell window.

    Returns (left-side value, right-side value) at the interface between cells
    4 and 5, plus the selection labels of those two cells.

    Stage 1 compares P4 against THINC(beta_s) per cell: a cell whose gentle
    THINC has strictly smaller TBV drags itself and both neighbours onto
    THINC(beta_s).  Only comparisons fully determined inside the window are
    evaluated (cells 3..6); marks are OR-combined.  Stage 2 re-evaluates the
    stage-1 selection against THINC(beta_l) for cells 4 and 5 individually.
    Ties keep the incumbent everywhere.
    """
    w = window.q
    p4r = [0.0] * 10
    p4l = [0.0] * 10
    tsr = [0.0] * 10
    tsl = [0.0] * 10
    for idx in range(2, 8):
        (p4r[idx], p4l[idx]), (tsr[idx], tsl[idx]), _ = _candidates(w, idx, variant)

    trip = {}
    for m in range(3, 7):
        tbv_p4 = abs(p4r[m - 1] - p4l[m]) + abs(p4r[m] - p4l[m + 1])
        tbv_ts = abs(tsr[m - 1] - tsl[m]) + abs(tsr[m] - tsl[m + 1])
        trip[m] = tbv_ts < tbv_p4

    def marked(cell: int) -> bool:
        return any(trip.get(m, False) for m in (cell - 1, cell, cell + 1))

    marks = {cell: marked(cell) for cell in (3, 4, 5, 6)}

    def stage1(cell: int) -> tuple[float, float]:
        if marks[cell]:
            return tsr[cell], tsl[cell]
        return p4r[cell], p4l[cell]

    def final(cell: int) -> tuple[float, float, SelectionLabel]:
        if variant is Variant.SYMMETRIC:
            tl_vals = [
                thinc_boundary_values_symmetric(w[j - 1], w[j], w[j + 1], BETA_L)
                for j in (cell - 1, cell, cell + 1)
            ]
        else:
            tl_vals = [
                thinc_boundary_values_original(w[j - 1], w[j], w[j + 1], BETA_L)
                for j in (cell - 1, cell, cell + 1)
            ]
        sel_m1, sel_0, sel_p1 = stage1(cell - 1), stage1(cell), stage1(cell + 1)
        tbv_stage1 = abs(sel_m1[0] - sel_0[1]) + abs(sel_0[0] - sel_p1[1])
        tbv_tl = abs(tl_vals[0][0] - tl_vals[1][1]) + abs(tl_vals[1][0] - tl_vals[2][1])
        if tbv_tl < tbv_stage1:
            return tl_vals[1][0], tl_vals[1][1], SelectionLabel.TL
        if marks[cell]:
            return tsr[cell], tsl[cell], SelectionLabel.TS
        return p4r[cell], p4l[cell], SelectionLabel.P4

    right_of_4, _, label_4 = final(4)
    _, left_of_5, label_5 = final(5)
    return right_of_4, left_of_5, label_4, label_5
