"""Shared builders for the test suite: random admissible states and grids."""

import numpy as np

from symfv.grid import Grid2D, make_grid, zero_gradient
from symfv.state import (
    ConservedState,
    GasModel,
    PrimitiveState,
    conserved_from_primitive,
)


def random_primitive(rng: np.random.Generator) -> PrimitiveState:
    """A state comfortably inside the physical region (no near-vacuum draws)."""
    return PrimitiveState(
        rho=0.1 + 3.0 * rng.uniform(),
        u=-2.0 + 4.0 * rng.uniform(),
        v=-2.0 + 4.0 * rng.uniform(),
        p=0.1 + 3.0 * rng.uniform(),
    )


def conserved_and_enthalpy(q: PrimitiveState, gas: GasModel) -> tuple[ConservedState, float]:
    u = conserved_from_primitive(q, gas)
    h = (u.energy + q.p) / q.rho
    return u, h


def random_interior(rng: np.random.Generator, nx: int, ny: int) -> np.ndarray:
    """(4, ny, nx) conserved field of independent admissible states."""
    gas = GasModel()
    out = np.empty((4, ny, nx))
    for j in range(ny):
        for i in range(nx):
            u = conserved_from_primitive(random_primitive(rng), gas)
            out[:, j, i] = (u.rho, u.mx, u.my, u.energy)
    return out


def random_grid(rng: np.random.Generator, nx: int, ny: int) -> Grid2D:
    """Unit-square grid with outflow edges and a random admissible interior."""
    grid = make_grid(
        nx, ny, 0.0, 1.0, 0.0, 1.0,
        zero_gradient(), zero_gradient(), zero_gradient(), zero_gradient(),
    )
    grid.interior[...] = random_interior(rng, nx, ny)
    return grid


def fill_uniform(grid: Grid2D, prim: PrimitiveState, gas: GasModel) -> Grid2D:
    u = conserved_from_primitive(prim, gas)
    for k, val in enumerate((u.rho, u.mx, u.my, u.energy)):
        grid.interior[k] = val
    return grid
