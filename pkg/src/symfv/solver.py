"""Time integration: CFL step size, dimension-wise RHS, SSP-RK3, run loop.

The RHS runs the sweep kernel once per axis.  The x-sweep reads interior rows
of the grid storage directly; the y-sweep reads transposed copies of interior
columns with the momentum planes exchanged, so both axes execute the identical
kernel on (rho, normal momentum, transverse momentum, E) lines.  This sharing
is what makes the x- and y-discretisations exact transposes of each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .errors import NonPositiveDensity, NonPositivePressure, UnphysicalState
from .grid import GHOST, Grid2D, apply_boundary
from .state import Axis, GasModel, Variant

ONE_THIRD = 1.0 / 3.0
TWO_THIRDS = 2.0 / 3.0


@dataclass(frozen=True)
class RunConfig:
    t_end: float
    cfl: float = 0.6
    gas: GasModel = GasModel()
    variant: Variant = Variant.SYMMETRIC
    gravity: float = 0.0
    snap_every: float | None = None
    threads: int = 1

    def __post_init__(self) -> None:
        if not 0.0 < self.cfl < 1.0:
            raise ValueError(f"cfl must lie in (0, 1), got {self.cfl}")
        if self.t_end < 0.0:
            raise ValueError(f"t_end must be nonnegative, got {self.t_end}")
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")
        if self.snap_every is not None and not self.snap_every > 0.0:
            raise ValueError(f"snap_every must be positive, got {self.snap_every}")


def _variant_flag(variant: Variant) -> int:
    return 1 if variant is Variant.SYMMETRIC else 0


def compute_dt(grid: Grid2D, config: RunConfig) -> float:
    """cfl * min(dx, dy) / max over interior of (max(|u|,|v|) + c).

    The reduction is a plain FP max, which is order-independent, so the step
    size is deterministic and identical for mirrored fields.
    """
    gas = config.gas
    q = grid.interior
    rho = q[0]
    if not (rho > 0.0).all():
        raise NonPositiveDensity("non-positive density in dt computation")
    u = q[1] / rho
    v = q[2] / rho
    p = (gas.gamma - 1.0) * (q[3] - 0.5 * rho * (u * u + v * v))
    if not (p > 0.0).all():
        raise NonPositivePressure("non-positive pressure in dt computation")
    c = np.sqrt(gas.gamma * p / rho)
    speed = np.maximum(np.abs(u), np.abs(v)) + c
    dmin = grid.dx if grid.dx < grid.dy else grid.dy
    return config.cfl * dmin / float(speed.max())


def _raise_sweep_error(err: np.ndarray, axis: Axis) -> None:
    line = int(np.argmax(err != 0))
    cell = int(err[line]) - GHOST
    if axis is Axis.X:
        i, j = cell, line
    else:
        i, j = line, cell
    raise UnphysicalState(
        f"invalid state in {axis.value}-sweep near interior cell ({i}, {j})", i=i, j=j
    )


def _sweep_x(grid: Grid2D, config: RunConfig):
    ny, nx = grid.ny, grid.nx
    lines = grid.data[:, GHOST : ny + GHOST, :]
    fluxes = np.empty((4, ny, nx + 1))
    labels = np.empty((4, ny, nx), dtype=np.int8)
    err = np.zeros(ny, dtype=np.int32)
    backend.sweep_lines(
        lines, fluxes, labels, err, config.gas.gamma, _variant_flag(config.variant),
        0, config.threads,
    )
    if err.any():
        _raise_sweep_error(err, Axis.X)
    return fluxes, labels


def _sweep_y(grid: Grid2D, config: RunConfig):
    ny, nx = grid.ny, grid.nx
    d = grid.data
    lines = np.empty((4, nx, ny + 2 * GHOST))
    lines[0] = d[0, :, GHOST : nx + GHOST].T
    lines[1] = d[2, :, GHOST : nx + GHOST].T
    lines[2] = d[1, :, GHOST : nx + GHOST].T
    lines[3] = d[3, :, GHOST : nx + GHOST].T
    fluxes = np.empty((4, nx, ny + 1))
    labels = np.empty((4, nx, ny), dtype=np.int8)
    err = np.zeros(nx, dtype=np.int32)
    backend.sweep_lines(
        lines, fluxes, labels, err, config.gas.gamma, _variant_flag(config.variant),
        1, config.threads,
    )
    if err.any():
        _raise_sweep_error(err, Axis.Y)
    return fluxes, labels


def compute_rhs(grid: Grid2D, config: RunConfig) -> np.ndarray:
    """Flux divergence (plus gravity) for every interior cell, shape (4, ny, nx).

    Boundaries must be applied first.  Each direction's contribution is the
    difference of the two interface fluxes over the cell size; the two
    contributions are then added as one commutative pair.
    """
    nx, ny = grid.nx, grid.ny
    fx, _ = _sweep_x(grid, config)
    fy, _ = _sweep_y(grid, config)
    xdiv = (fx[:, :, 0:nx] - fx[:, :, 1 : nx + 1]) / grid.dx
    fyg = fy[[0, 2, 1, 3]]
    ydiv = (fyg[:, :, 0:ny] - fyg[:, :, 1 : ny + 1]) / grid.dy
    rhs = xdiv + ydiv.transpose(0, 2, 1)
    if config.gravity != 0.0:
        g = config.gravity
        q = grid.interior
        rhs[2] += q[0] * g
        rhs[3] += q[2] * g
    return rhs


def selection_labels(grid: Grid2D, config: RunConfig):
    """Per-cell candidate choices of a diagnostic sweep of the current field.

    Returns (x_labels, y_labels) with shapes (4, ny, nx) and (4, nx, ny); the
    leading index is the characteristic component in eigenvalue order
    (un-c, un, un+c, shear).  Does not advance the solution.
    """
    apply_boundary(grid, config.gas)
    _, lx = _sweep_x(grid, config)
    _, ly = _sweep_y(grid, config)
    return lx, ly


def ssp_rk3_step(grid: Grid2D, dt: float, config: RunConfig) -> Grid2D:
    """One three-stage strong-stability-preserving Runge-Kutta step, in place.

    u1 = u + dt L(u); u2 = 3/4 u + 1/4 (u1 + dt L(u1));
    u  = 1/3 u + 2/3 (u2 + dt L(u2)).  All combinations are element-wise in
    exactly this bracketing; ghost cells are refilled before each L().
    """
    interior = grid.interior
    apply_boundary(grid, config.gas)
    u0 = interior.copy()
    r = compute_rhs(grid, config)
    interior[...] = u0 + dt * r
    apply_boundary(grid, config.gas)
    r = compute_rhs(grid, config)
    interior[...] = 0.75 * u0 + 0.25 * (interior + dt * r)
    apply_boundary(grid, config.gas)
    r = compute_rhs(grid, config)
    interior[...] = ONE_THIRD * u0 + TWO_THIRDS * (interior + dt * r)
    return grid


def conserved_totals(grid: Grid2D) -> tuple[float, float, float, float]:
    """Interior sums of (rho, rho*u, rho*v, E) via numpy's pairwise reduction
    (deterministic for a fixed shape)."""
    q = grid.interior
    return (
        float(q[0].sum()),
        float(q[1].sum()),
        float(q[2].sum()),
        float(q[3].sum()),
    )


@dataclass(frozen=True)
class StepRecord:
    step: int
    t: float
    dt: float
    mass: float
    mom_x: float
    mom_y: float
    energy: float


def run(grid: Grid2D, config: RunConfig, on_step=None, on_snapshot=None):
    """Advance to t_end; returns (grid, [StepRecord...]).

    The final step is clamped so the run lands exactly on t_end.  ``on_step``
    is called after every step; ``on_snapshot`` whenever the time crosses a
    multiple of ``config.snap_every``.
    """
    t = 0.0
    step = 0
    records = [StepRecord(0, 0.0, 0.0, *conserved_totals(grid))]
    next_snap = config.snap_every
    while t < config.t_end:
        dt = compute_dt(grid, config)
        clamped = t + dt > config.t_end
        if clamped:
            dt = config.t_end - t
        try:
            ssp_rk3_step(grid, dt, config)
        except UnphysicalState as exc:
            raise UnphysicalState(
                f"step {step + 1} (t = {t!r}): {exc}", i=exc.i, j=exc.j
            ) from exc
        t = config.t_end if clamped else t + dt
        step += 1
        records.append(StepRecord(step, t, dt, *conserved_totals(grid)))
        if on_step is not None:
            on_step(step, t, dt, grid)
        if next_snap is not None and on_snapshot is not None:
            while next_snap <= t * (1.0 + 1e-12) and next_snap <= config.t_end:
                on_snapshot(grid, t)
                next_snap += config.snap_every
    return grid, records
