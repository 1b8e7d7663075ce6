"""Grid storage, coordinates, and ghost-cell fills."""

import numpy as np
import pytest

from symfv.grid import (
    GHOST,
    BoundaryKind,
    apply_boundary,
    cell_center,
    fixed,
    make_grid,
    reflective,
    zero_gradient,
)
from symfv.state import GasModel, PrimitiveState

from helpers import random_grid

GAS = GasModel()


def _open_box(nx, ny):
    return make_grid(
        nx, ny, 0.0, 1.0, 0.0, 1.0,
        zero_gradient(), zero_gradient(), zero_gradient(), zero_gradient(),
    )


def test_make_grid_validation():
    for args in ((0, 4), (4, 0), (-2, 4)):
        with pytest.raises(ValueError):
            make_grid(*args, 0.0, 1.0, 0.0, 1.0,
                      zero_gradient(), zero_gradient(), zero_gradient(), zero_gradient())
    with pytest.raises(ValueError):
        make_grid(4, 4, 0.0, 0.0, 0.0, 1.0,
                  zero_gradient(), zero_gradient(), zero_gradient(), zero_gradient())
    with pytest.raises(ValueError):
        fixed(None)


def test_layout_and_coordinates():
    grid = make_grid(8, 6, -0.5, 0.5, 0.0, 3.0,
                     zero_gradient(), zero_gradient(), zero_gradient(), zero_gradient())
    assert GHOST == 5
    assert grid.data.shape == (4, 6 + 2 * GHOST, 8 + 2 * GHOST)
    assert grid.data.flags["C_CONTIGUOUS"]
    assert grid.interior.shape == (4, 6, 8)
    assert grid.dx == 0.125 and grid.dy == 0.5
    assert grid.x_center(0) == -0.5 + 0.5 * 0.125
    assert grid.y_center(5) == 2.75
    assert cell_center(0.0, 3, 0.25) == 0.875
    # the interior is a live view
    grid.interior[0, 2, 3] = 7.0
    assert grid.data[0, 2 + GHOST, 3 + GHOST] == 7.0


def test_copy_is_deep(rng):
    grid = random_grid(rng, 6, 5)
    clone = grid.copy()
    clone.interior[0, 0, 0] += 1.0
    assert grid.interior[0, 0, 0] != clone.interior[0, 0, 0]
    assert clone.bc_left is grid.bc_left  # conditions are immutable, sharing is fine


def test_zero_gradient_fill_repeats_the_edge(rng):
    grid = random_grid(rng, 6, 5)
    apply_boundary(grid, GAS)
    d = grid.data
    for m in range(GHOST):
        assert np.array_equal(d[:, GHOST : 5 + GHOST, m], d[:, GHOST : 5 + GHOST, GHOST])
        assert np.array_equal(d[:, m, :], d[:, GHOST, :])


def test_reflective_fill_mirrors_and_negates(rng):
    grid = make_grid(6, 5, 0.0, 1.0, 0.0, 1.0,
                     reflective(), zero_gradient(), zero_gradient(), reflective())
    grid.interior[...] = random_grid(rng, 6, 5).interior
    apply_boundary(grid, GAS)
    d = grid.data
    rows = np.s_[GHOST : 5 + GHOST]
    for m in range(GHOST):
        # left wall: m-th ghost layer mirrors the m-th interior layer
        assert np.array_equal(d[0, rows, GHOST - 1 - m], d[0, rows, GHOST + m])
        assert np.array_equal(d[1, rows, GHOST - 1 - m], -d[1, rows, GHOST + m])
        assert np.array_equal(d[2, rows, GHOST - 1 - m], d[2, rows, GHOST + m])
        # top wall negates the y-momentum instead
        top_interior = 5 + GHOST - 1 - m
        assert np.array_equal(d[2, 5 + GHOST + m, :], -d[2, top_interior, :])
        assert np.array_equal(d[1, 5 + GHOST + m, :], d[1, top_interior, :])


def test_fixed_fill_stores_the_conserved_image():
    grid = make_grid(4, 4, 0.0, 1.0, 0.0, 1.0,
                     zero_gradient(), zero_gradient(), zero_gradient(),
                     fixed(PrimitiveState(1.0, 0.0, 0.0, 2.5)))
    grid.interior[0] = 1.0
    grid.interior[3] = 2.5
    gas = GasModel(5.0 / 3.0)
    apply_boundary(grid, gas)
    # p / (gamma - 1): one ulp under 3.75 because 5/3 rounds up
    expected = 2.5 / (5.0 / 3.0 - 1.0)
    assert (grid.data[3, 4 + GHOST :, :] == expected).all()
    assert expected == pytest.approx(3.75, rel=1e-15)
    assert (grid.data[0, 4 + GHOST :, :] == 1.0).all()


def test_boundary_kinds_are_distinct():
    assert zero_gradient().kind is BoundaryKind.ZERO_GRADIENT
    assert reflective().kind is BoundaryKind.REFLECTIVE
    assert fixed(PrimitiveState(1.0, 0.0, 0.0, 1.0)).kind is BoundaryKind.FIXED
