"""Initial conditions: frozen tables, per-cell classification, and the mirror
symmetries each field must (or must not) carry at t = 0.
"""

import numpy as np
import pytest

from symfv.audit import SymmetryType, audit_grid
from symfv.benchmarks import BENCHMARKS, build
from symfv.state import GasModel, PrimitiveState, Variant, conserved_from_primitive


def _cell(grid, i, j):
    return tuple(grid.interior[:, j, i])


def _conserved(prim, gas):
    u = conserved_from_primitive(prim, gas)
    return (u.rho, u.mx, u.my, u.energy)


def test_frozen_benchmark_table():
    assert set(BENCHMARKS) == {"riemann3", "riemann12", "rti", "implosion", "smoothwave"}
    r3 = BENCHMARKS["riemann3"]
    assert (r3.x0, r3.x1, r3.y0, r3.y1) == (-0.5, 0.5, -0.5, 0.5)
    assert (r3.default_nx, r3.default_ny, r3.t_end) == (200, 200, 0.8)
    assert BENCHMARKS["riemann12"].t_end == 0.25
    rti = BENCHMARKS["rti"]
    assert (rti.x1, rti.y1, rti.t_end, rti.gravity) == (0.25, 1.0, 1.95, 1.0)
    assert rti.gas == GasModel(5.0 / 3.0)
    assert (rti.default_nx, rti.default_ny) == (64, 256)
    imp = BENCHMARKS["implosion"]
    assert (imp.x0, imp.x1, imp.t_end) == (-0.3, 0.3, 2.5)
    assert BENCHMARKS["smoothwave"].t_end == 1.0


def test_unknown_benchmark_is_rejected():
    with pytest.raises(ValueError):
        build("kelvin")


def test_resolution_overrides():
    grid, _ = build("riemann3", 32, 48)
    assert (grid.nx, grid.ny) == (32, 48)
    grid, _ = build("riemann3")
    assert (grid.nx, grid.ny) == (200, 200)


def test_riemann3_quadrant_states():
    grid, spec = build("riemann3", 10, 10)
    gas = spec.gas
    # centers at -0.45 + 0.1 k; the split sits at 0.3
    assert _cell(grid, 8, 8) == _conserved(PrimitiveState(1.5, 0.0, 0.0, 1.5), gas)
    assert _cell(grid, 0, 8) == _conserved(PrimitiveState(0.5323, 1.206, 0.0, 0.3), gas)
    assert _cell(grid, 0, 0) == _conserved(PrimitiveState(0.138, 1.206, 1.206, 0.029), gas)
    assert _cell(grid, 8, 0) == _conserved(PrimitiveState(0.5323, 0.0, 1.206, 0.3), gas)


def test_riemann12_quadrant_states():
    grid, spec = build("riemann12", 10, 10)
    gas = spec.gas
    assert _cell(grid, 7, 7) == _conserved(PrimitiveState(0.5313, 0.0, 0.0, 0.4), gas)
    assert _cell(grid, 2, 7) == _conserved(PrimitiveState(1.0, 0.7276, 0.0, 1.0), gas)
    assert _cell(grid, 2, 2) == _conserved(PrimitiveState(0.8, 0.0, 0.0, 1.0), gas)
    assert _cell(grid, 7, 2) == _conserved(PrimitiveState(1.0, 0.0, 0.7276, 1.0), gas)


def test_implosion_diamond_classification():
    grid, spec = build("implosion", 9, 9)
    gas = spec.gas
    inner = _conserved(PrimitiveState(0.125, 0.0, 0.0, 0.14), gas)
    outer = _conserved(PrimitiveState(1.0, 0.0, 0.0, 1.0), gas)
    assert _cell(grid, 4, 4) == inner  # center (0, 0)
    assert _cell(grid, 8, 8) == outer  # corner
    assert _cell(grid, 5, 4) == inner  # (0.0667, 0): |x+y| = |x-y| < 0.15
    assert _cell(grid, 8, 4) == outer  # (0.2667, 0)


def test_stratified_column_profile():
    grid, spec = build("rti", 4, 2)
    gamma = spec.gas.gamma
    assert (grid.interior[0, 0, :] == 2.0).all()
    assert (grid.interior[0, 1, :] == 1.0).all()
    # recover the pressure from the stored energy and perturbation momentum
    q = grid.interior
    ke = 0.5 * q[2] ** 2 / q[0]
    p = (gamma - 1.0) * (q[3] - ke)
    assert p[0, :] == pytest.approx(2.0 * 0.25 + 1.0, rel=1e-14)
    assert p[1, :] == pytest.approx(0.75 + 1.5, rel=1e-14)
    assert (q[1] == 0.0).all()


def test_stratified_column_boundaries():
    grid, _ = build("rti", 8, 16)
    from symfv.grid import BoundaryKind

    assert grid.bc_left.kind is BoundaryKind.REFLECTIVE
    assert grid.bc_right.kind is BoundaryKind.REFLECTIVE
    assert grid.bc_bottom.kind is BoundaryKind.FIXED
    assert grid.bc_bottom.state == PrimitiveState(2.0, 0.0, 0.0, 1.0)
    assert grid.bc_top.kind is BoundaryKind.FIXED
    assert grid.bc_top.state == PrimitiveState(1.0, 0.0, 0.0, 2.5)


@pytest.mark.parametrize(
    "name,symmetry",
    [
        ("riemann3", SymmetryType.DIAGONAL),
        ("riemann12", SymmetryType.DIAGONAL),
        ("smoothwave", SymmetryType.DIAGONAL),
        ("implosion", SymmetryType.DIAGONAL),
        ("implosion", SymmetryType.X_AXIS),
        ("implosion", SymmetryType.Y_AXIS),
    ],
)
def test_initial_fields_are_exactly_symmetric(name, symmetry):
    grid, _ = build(name, 64, 64)
    report = audit_grid(grid, symmetry)
    assert report.exact, report.render()


def test_symmetric_perturbation_is_exactly_mirrored():
    grid, _ = build("rti", 64, 256, rti_perturbation=Variant.SYMMETRIC)
    report = audit_grid(grid, SymmetryType.Y_AXIS)
    assert report.exact, report.render()


def test_original_perturbation_is_not_mirrored():
    grid, _ = build("rti", 64, 256, rti_perturbation=Variant.ORIGINAL)
    report = audit_grid(grid, SymmetryType.Y_AXIS)
    assert not report.exact
    assert report.mismatch_total > 0
