"""Face-value candidates and the two-stage selector.

Covers the frozen example values, the mirror identities the symmetric forms
must satisfy exactly, the last-bit counterexamples the conventional forms are
expected to produce, and the boundedness/accuracy contracts of each candidate.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from symfv.errors import WindowTooSmall
from symfv.reconstruction import (
    BETA_L,
    BETA_S,
    CheckMode,
    ReconWindow,
    SelectionLabel,
    bvd_select,
    candidate_values,
    p4_boundary_values,
    sf_si_check,
    tbv,
    thinc_boundary_values_original,
    thinc_boundary_values_symmetric,
)
from symfv.state import Variant

VARIANTS = (Variant.SYMMETRIC, Variant.ORIGINAL)

stencil_floats = st.floats(
    min_value=-4.0, max_value=4.0, allow_nan=False, allow_infinity=False
)
stencils = st.tuples(*([stencil_floats] * 5))


def monotone_triples():
    base = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)
    step = st.floats(min_value=1e-6, max_value=2.0, allow_nan=False, allow_infinity=False)
    sign = st.sampled_from((1.0, -1.0))
    return st.builds(
        lambda q0, d1, d2, s: (q0, q0 + s * d1, q0 + s * (d1 + d2)),
        base, step, step, sign,
    )


# ---------------------------------------------------------------------------
# polynomial candidate


@pytest.mark.parametrize("variant", VARIANTS)
def test_polynomial_example_values(variant):
    assert p4_boundary_values((0.0, 1.0, 2.0, 3.0, 4.0), variant) == (2.5, 1.5)
    right, left = p4_boundary_values((1.0, 0.0, 0.0, 0.0, 0.0), variant)
    assert right == 2.0 / 60.0
    assert left == -3.0 / 60.0


@pytest.mark.parametrize("variant", VARIANTS)
def test_polynomial_reproduces_constants(variant):
    assert p4_boundary_values((1.0,) * 5, variant) == (1.0, 1.0)
    right, left = p4_boundary_values((0.1,) * 5, variant)
    assert abs(right - 0.1) <= 2.0 * np.spacing(0.1)
    assert abs(left - 0.1) <= 2.0 * np.spacing(0.1)


def test_symmetric_polynomial_faces_coincide_on_constants():
    # the reversed-order left face walks the identical sum for constant input
    for c in (0.1, math.pi, 1.37e-3):
        right, left = p4_boundary_values((c,) * 5, Variant.SYMMETRIC)
        assert right == left


def test_polynomial_order_on_smooth_averages():
    """Face values of cell-averaged sin(2 pi x) converge at fifth order."""
    errors = []
    for n in (32, 64):
        dx = 1.0 / n
        edges = np.arange(n + 1) * dx
        avg = (np.cos(2 * np.pi * edges[:-1]) - np.cos(2 * np.pi * edges[1:])) / (
            2 * np.pi * dx
        )
        worst = 0.0
        for i in range(2, n - 2):
            right, _ = p4_boundary_values(avg[i - 2 : i + 3], Variant.SYMMETRIC)
            worst = max(worst, abs(right - math.sin(2 * math.pi * edges[i + 1])))
        errors.append(worst)
    order = math.log2(errors[0] / errors[1])
    assert order >= 4.5


@settings(max_examples=300, deadline=None)
@given(s=stencils)
def test_symmetric_polynomial_flip_and_negation_are_exact(s):
    recon = lambda *q: p4_boundary_values(q, Variant.SYMMETRIC)
    assert sf_si_check(recon, s, CheckMode.SF)
    assert sf_si_check(recon, s, CheckMode.SI)


@settings(max_examples=300, deadline=None)
@given(s=stencils)
def test_original_polynomial_negation_is_exact(s):
    # products negate exactly, so sign inversion survives even the ascending order
    recon = lambda *q: p4_boundary_values(q, Variant.ORIGINAL)
    assert sf_si_check(recon, s, CheckMode.SI)


def test_original_polynomial_flip_has_counterexamples(rng):
    recon = lambda *q: p4_boundary_values(q, Variant.ORIGINAL)
    failures = sum(
        not sf_si_check(recon, tuple(-2.0 + 4.0 * rng.uniform(size=5)), CheckMode.SF)
        for _ in range(1000)
    )
    assert failures >= 1


# ---------------------------------------------------------------------------
# hyperbolic-tangent candidate


def test_tanh_candidate_example_value():
    got = thinc_boundary_values_symmetric(0.0, 0.5, 1.0, BETA_L)
    assert got == (0.5 + 0.5 * math.tanh(0.8), 0.5 - 0.5 * math.tanh(0.8))


@pytest.mark.parametrize(
    "triple", [(1.0, 2.0, 1.0), (3.0, 3.0, 3.0), (1.0, 1.0, 2.0)]
)
def test_tanh_candidate_falls_back_on_non_monotone_input(triple):
    qm, qc, qp = triple
    assert thinc_boundary_values_original(qm, qc, qp, BETA_S) == (qc, qc)
    assert thinc_boundary_values_symmetric(qm, qc, qp, BETA_S) == (qc, qc)


def test_tanh_variants_agree_to_rounding(rng):
    for _ in range(2000):
        qm = 0.1 + 2.0 * rng.uniform()
        qc = qm + 0.05 + rng.uniform()
        qp = qc + 0.05 + rng.uniform()
        for beta in (BETA_S, BETA_L):
            a = thinc_boundary_values_original(qm, qc, qp, beta)
            b = thinc_boundary_values_symmetric(qm, qc, qp, beta)
            assert a[0] == pytest.approx(b[0], rel=1e-13)
            assert a[1] == pytest.approx(b[1], rel=1e-13)


@settings(max_examples=300, deadline=None)
@given(triple=monotone_triples())
def test_symmetric_tanh_flip_and_negation_are_exact(triple):
    for beta in (BETA_S, BETA_L):
        recon = lambda qm, qc, qp: thinc_boundary_values_symmetric(qm, qc, qp, beta)
        assert sf_si_check(recon, triple, CheckMode.SF)
        assert sf_si_check(recon, triple, CheckMode.SI)


def test_original_tanh_negation_has_counterexamples(rng):
    recon = lambda qm, qc, qp: thinc_boundary_values_original(qm, qc, qp, BETA_S)
    failures = 0
    for _ in range(10000):
        qm = 0.1 + 2.0 * rng.uniform()
        qc = qm + 0.05 + rng.uniform()
        qp = qc + 0.05 + rng.uniform()
        if not sf_si_check(recon, (qm, qc, qp), CheckMode.SI):
            failures += 1
    assert failures >= 1


@pytest.mark.parametrize(
    "reconstruct",
    [thinc_boundary_values_original, thinc_boundary_values_symmetric],
    ids=["original", "symmetric"],
)
def test_tanh_candidate_stays_bounded(rng, reconstruct):
    """Face values never leave the neighbour bracket by more than one step."""
    for _ in range(3000):
        qm = -2.0 + 4.0 * rng.uniform()
        qc = -2.0 + 4.0 * rng.uniform()
        qp = -2.0 + 4.0 * rng.uniform()
        beta = BETA_S if rng.uniform() < 0.5 else BETA_L
        right, left = reconstruct(qm, qc, qp, beta)
        lo = min(qm, qc, qp)
        hi = max(qm, qc, qp)
        lo = np.nextafter(lo, -np.inf)
        hi = np.nextafter(hi, np.inf)
        assert lo <= right <= hi
        assert lo <= left <= hi


# ---------------------------------------------------------------------------
# boundary variation and the selector


def test_total_boundary_variation_examples():
    assert tbv((1.0, 1.0), (2.0, 2.0)) == 0.0
    assert tbv((0.0, 1.0), (1.0, 2.0)) == 2.0


def test_total_boundary_variation_is_mirror_invariant(rng):
    for _ in range(500):
        a, b, c, d = -2.0 + 4.0 * rng.uniform(size=4)
        assert tbv((a, b), (c, d)) == tbv((d, c), (b, a))


def test_window_must_have_ten_cells():
    with pytest.raises(WindowTooSmall):
        ReconWindow((0.0,) * 9)
    with pytest.raises(WindowTooSmall):
        ReconWindow((0.0,) * 11)


@pytest.mark.parametrize("variant", VARIANTS)
def test_selector_keeps_the_polynomial_on_constants(variant):
    right, left, lab4, lab5 = bvd_select(ReconWindow((1.0,) * 10), variant)
    assert (right, left) == (1.0, 1.0)
    assert lab4 is SelectionLabel.P4 and lab5 is SelectionLabel.P4

    right, left, lab4, lab5 = bvd_select(ReconWindow((0.1,) * 10), variant)
    assert abs(right - 0.1) <= 2.0 * np.spacing(0.1)
    assert abs(left - 0.1) <= 2.0 * np.spacing(0.1)
    assert lab4 is SelectionLabel.P4 and lab5 is SelectionLabel.P4


@pytest.mark.parametrize("variant", VARIANTS)
def test_selector_sharpens_a_step(variant):
    window = ReconWindow((0.0,) * 5 + (1.0,) * 5)
    right, left, lab4, lab5 = bvd_select(window, variant)
    assert (right, left) == (0.0, 1.0)
    assert lab4 is SelectionLabel.TS and lab5 is SelectionLabel.TS


@pytest.mark.parametrize("variant", VARIANTS)
def test_selector_keeps_the_polynomial_on_smooth_data(variant):
    window = ReconWindow(tuple(math.sin(k / 10.0) for k in range(10)))
    _, _, lab4, lab5 = bvd_select(window, variant)
    assert lab4 is SelectionLabel.P4 and lab5 is SelectionLabel.P4


def test_candidate_values_match_the_piecewise_functions(rng):
    w = tuple(-2.0 + 4.0 * rng.uniform(size=10))
    for variant in VARIANTS:
        c = candidate_values(w, 4, variant)
        assert c.p4 == p4_boundary_values(w[2:7], variant)
        if variant is Variant.SYMMETRIC:
            assert c.ts == thinc_boundary_values_symmetric(w[3], w[4], w[5], BETA_S)
            assert c.tl == thinc_boundary_values_symmetric(w[3], w[4], w[5], BETA_L)
        else:
            assert c.ts == thinc_boundary_values_original(w[3], w[4], w[5], BETA_S)
            assert c.tl == thinc_boundary_values_original(w[3], w[4], w[5], BETA_L)


def test_symmetric_selector_commutes_with_window_reversal(rng):
    """Reversing the window swaps the interface pair and the labels exactly."""
    for _ in range(1000):
        w = tuple(-2.0 + 4.0 * rng.uniform(size=10))
        right, left, lab4, lab5 = bvd_select(ReconWindow(w), Variant.SYMMETRIC)
        r_right, r_left, r_lab4, r_lab5 = bvd_select(
            ReconWindow(w[::-1]), Variant.SYMMETRIC
        )
        assert (r_right, r_left) == (left, right)
        assert (r_lab4, r_lab5) == (lab5, lab4)


def test_original_selector_breaks_under_window_reversal(rng):
    violations = 0
    for _ in range(1000):
        w = tuple(-2.0 + 4.0 * rng.uniform(size=10))
        right, left, lab4, lab5 = bvd_select(ReconWindow(w), Variant.ORIGINAL)
        r_right, r_left, r_lab4, r_lab5 = bvd_select(
            ReconWindow(w[::-1]), Variant.ORIGINAL
        )
        if (r_right, r_left, r_lab4, r_lab5) != (left, right, lab5, lab4):
            violations += 1
    assert violations >= 1
