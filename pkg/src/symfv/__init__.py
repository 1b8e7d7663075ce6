"""Finite-volume compressible-flow solver with mirror-symmetric arithmetic.

A dimension-wise Godunov scheme (boundary-variation-diminishing selection
between a fifth-order polynomial and two sharpness levels of a tanh profile,
characteristic-wise, with an HLLC flux and three-stage strong-stability time
stepping) in two floating-point variants: ``Variant.ORIGINAL`` evaluates
formulas in their conventional order, ``Variant.SYMMETRIC`` reorders sums and
factorizations so that mirrored states produce mirrored results down to the
last bit.  The ``audit`` module measures exactly that.
"""

from .audit import (
    HarnessResult,
    SymmetryReport,
    SymmetryType,
    audit,
    audit_grid,
    mirror_field,
    property_harness,
)
from .backend import BACKEND
from .benchmarks import BENCHMARKS, build
from .errors import (
    DegenerateWaveFan,
    ImaginarySoundSpeed,
    MalformedDump,
    NonPositiveDensity,
    NonPositivePressure,
    ShapeMismatch,
    SolverError,
    UnphysicalState,
    WindowTooSmall,
)
from .grid import (
    BoundaryCondition,
    BoundaryKind,
    Grid2D,
    apply_boundary,
    fixed,
    make_grid,
    reflective,
    zero_gradient,
)
from .io import (
    FieldDump,
    SelectionDump,
    read_field_dump,
    read_selection_dump,
    write_field_dump,
    write_selection_dump,
)
from .solver import (
    RunConfig,
    StepRecord,
    compute_dt,
    compute_rhs,
    conserved_totals,
    run,
    selection_labels,
    ssp_rk3_step,
)
from .state import (
    Axis,
    ConservedState,
    GasModel,
    PrimitiveState,
    Variant,
    conserved_from_primitive,
    primitive_from_conserved,
)

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "BACKEND",
    "BENCHMARKS",
    "BoundaryCondition",
    "BoundaryKind",
    "ConservedState",
    "DegenerateWaveFan",
    "FieldDump",
    "GasModel",
    "Grid2D",
    "HarnessResult",
    "ImaginarySoundSpeed",
    "MalformedDump",
    "NonPositiveDensity",
    "NonPositivePressure",
    "PrimitiveState",
    "RunConfig",
    "SelectionDump",
    "ShapeMismatch",
    "SolverError",
    "StepRecord",
    "SymmetryReport",
    "SymmetryType",
    "UnphysicalState",
    "Variant",
    "WindowTooSmall",
    "apply_boundary",
    "audit",
    "audit_grid",
    "build",
    "compute_dt",
    "compute_rhs",
    "conserved_from_primitive",
    "conserved_totals",
    "fixed",
    "make_grid",
    "mirror_field",
    "primitive_from_conserved",
    "property_harness",
    "read_field_dump",
    "read_selection_dump",
    "reflective",
    "run",
    "selection_labels",
    "ssp_rk3_step",
    "write_field_dump",
    "write_selection_dump",
    "zero_gradient",
]
