"""Command-line entry points: run, audit, convergence, selection-map, bench.

Exit codes are part of the interface: 0 success (and, for ``audit``, exact
mirror agreement), 1 for a run whose check failed (audit mismatch, convergence
order below threshold), 2 for bad arguments or malformed files, 3 when time
stepping hit an unphysical state.
"""

from __future__ import annotations

import argparse
import sys
import time as _time
from pathlib import Path

from . import backend
from .audit import SymmetryType, audit, audit_grid
from .benchmarks import BENCHMARKS, build
from .errors import MalformedDump, ShapeMismatch, UnphysicalState
from .io import read_field_dump, write_field_dump, write_selection_dump
from .oned import convergence_study
from .solver import RunConfig, compute_dt, run, selection_labels, ssp_rk3_step
from .state import Variant

_VARIANTS = {"original": Variant.ORIGINAL, "symmetric": Variant.SYMMETRIC}
_SYMMETRY_CHOICES = tuple(t.value for t in SymmetryType)


def _add_problem_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--bench", required=True, choices=sorted(BENCHMARKS))
    parser.add_argument("--nx", type=int, default=None, help="cells in x (benchmark default)")
    parser.add_argument("--ny", type=int, default=None, help="cells in y (benchmark default)")
    parser.add_argument(
        "--variant", choices=sorted(_VARIANTS), default="symmetric",
        help="arithmetic mode of the solver",
    )
    parser.add_argument("--t-end", type=float, default=None, help="final time (benchmark default)")
    parser.add_argument("--cfl", type=float, default=0.6)
    parser.add_argument(
        "--rti-perturbation", choices=sorted(_VARIANTS), default=None,
        help="interface perturbation mode for the rti benchmark (default: --variant)",
    )
    parser.add_argument("--threads", type=int, default=1, help="sweep lines processed in parallel")


def _build_problem(parser: argparse.ArgumentParser, args, snap_every: float | None = None):
    if args.nx is not None and args.nx < 1:
        parser.error(f"--nx must be >= 1, got {args.nx}")
    if args.ny is not None and args.ny < 1:
        parser.error(f"--ny must be >= 1, got {args.ny}")
    perturbation = args.rti_perturbation if args.rti_perturbation else args.variant
    grid, spec = build(
        args.bench, args.nx, args.ny, rti_perturbation=_VARIANTS[perturbation]
    )
    t_end = spec.t_end if args.t_end is None else args.t_end
    try:
        config = RunConfig(
            t_end=t_end,
            cfl=args.cfl,
            gas=spec.gas,
            variant=_VARIANTS[args.variant],
            gravity=spec.gravity,
            snap_every=snap_every,
            threads=args.threads,
        )
    except ValueError as exc:
        parser.error(str(exc))
    return grid, spec, config


def _admissible_symmetries(grid) -> list[SymmetryType]:
    types = [SymmetryType.Y_AXIS, SymmetryType.X_AXIS]
    if grid.nx == grid.ny and grid.dx == grid.dy:
        types.append(SymmetryType.DIAGONAL)
    return types


def cmd_run(parser: argparse.ArgumentParser, args) -> int:
    grid, spec, config = _build_problem(parser, args, snap_every=args.snap_every)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    def snapshot(g, t):
        write_field_dump(
            out / f"{args.bench}_t{t:.6f}.sfv", g.interior, t, g.dx, g.dy
        )

    print(f"backend: {backend.BACKEND}")
    print(
        f"run: {args.bench} {grid.nx}x{grid.ny} variant={args.variant}"
        f" t_end={config.t_end} cfl={config.cfl} threads={config.threads}"
    )
    try:
        grid, records = run(grid, config, on_snapshot=snapshot)
    except UnphysicalState as exc:
        print(f"unphysical state: {exc}", file=sys.stderr)
        return 3
    snapshot(grid, config.t_end)

    csv_path = out / f"{args.bench}_conservation.csv"
    with open(csv_path, "w") as handle:
        handle.write("step,t,dt,sum_rho,sum_rhou,sum_rhov,sum_E\n")
        for rec in records:
            handle.write(
                f"{rec.step},{rec.t!r},{rec.dt!r},{rec.mass!r},"
                f"{rec.mom_x!r},{rec.mom_y!r},{rec.energy!r}\n"
            )

    reports = [audit_grid(grid, sym) for sym in _admissible_symmetries(grid)]
    audit_path = out / f"{args.bench}_audit.txt"
    audit_path.write_text("\n".join(r.render() for r in reports) + "\n")
    for report in reports:
        status = "exact" if report.exact else f"{report.mismatch_total} mismatched cells"
        print(f"audit {report.symmetry.value}: {status}")
    print(f"wrote {audit_path} and {csv_path}; {len(records) - 1} steps")
    return 0


def cmd_audit(parser: argparse.ArgumentParser, args) -> int:
    try:
        dump = read_field_dump(args.file)
    except (MalformedDump, OSError) as exc:
        print(f"cannot read dump: {exc}", file=sys.stderr)
        return 2
    symmetry = SymmetryType(args.type)
    if symmetry is SymmetryType.DIAGONAL and dump.dx != dump.dy:
        print(
            f"diagonal audit needs square cells, got dx={dump.dx!r} dy={dump.dy!r}",
            file=sys.stderr,
        )
        return 2
    try:
        report = audit(dump.data, symmetry)
    except ShapeMismatch as exc:
        print(f"cannot audit: {exc}", file=sys.stderr)
        return 2
    print(report.render())
    return 0 if report.exact else 1


def cmd_convergence(parser: argparse.ArgumentParser, args) -> int:
    try:
        sizes = tuple(int(part) for part in args.grids.split(","))
    except ValueError:
        parser.error(f"--grids must be a comma-separated integer list, got {args.grids!r}")
    if not sizes or any(n < 8 for n in sizes):
        parser.error(f"grid sizes must all be >= 8, got {args.grids!r}")
    rows = convergence_study(sizes, variant=_VARIANTS[args.variant])
    print(f"{'n':>6}  {'L1 error':>24}  {'order':>7}")
    for n, err, order in rows:
        order_txt = f"{order:7.3f}" if order is not None else " " * 7
        print(f"{n:>6}  {err:>24.16e}  {order_txt}")
    final_order = rows[-1][2]
    if final_order is None:
        return 0
    print(f"final observed order: {final_order:.3f} (threshold 4.5)")
    return 0 if final_order >= 4.5 else 1


def cmd_selection_map(parser: argparse.ArgumentParser, args) -> int:
    grid, spec, config = _build_problem(parser, args)
    try:
        grid, _ = run(grid, config)
        x_labels, y_labels = selection_labels(grid, config)
    except UnphysicalState as exc:
        print(f"unphysical state: {exc}", file=sys.stderr)
        return 3
    labels = x_labels if args.axis == "x" else y_labels.transpose(0, 2, 1)
    out = Path(args.out)
    if out.parent != Path(""):
        out.parent.mkdir(parents=True, exist_ok=True)
    write_selection_dump(out, labels, config.t_end, grid.dx, grid.dy)
    print(f"wrote {out} ({args.axis}-sweep labels, {grid.nx}x{grid.ny})")
    return 0


def cmd_bench(parser: argparse.ArgumentParser, args) -> int:
    """Time the same fixed step sequence on every available backend."""
    if args.steps < 1:
        parser.error(f"--steps must be >= 1, got {args.steps}")
    results = {}
    fields = {}
    entry_backend = backend.BACKEND
    try:
        for name in backend.available():
            backend.use(name)
            grid, spec = build(args.bench, args.nx, args.ny)
            config = RunConfig(
                t_end=spec.t_end, gas=spec.gas, gravity=spec.gravity, threads=args.threads
            )
            t0 = _time.perf_counter()
            for _ in range(args.steps):
                dt = compute_dt(grid, config)
                ssp_rk3_step(grid, dt, config)
            elapsed = _time.perf_counter() - t0
            rate = args.steps * grid.nx * grid.ny / elapsed
            results[name] = (elapsed, rate)
            fields[name] = grid.interior.copy()
            print(f"{name:>8}: {elapsed:8.3f} s for {args.steps} steps  ({rate:12.0f} cell-steps/s)")
    finally:
        backend.use(entry_backend)
    if len(results) == 2:
        speedup = results["python"][0] / results["compiled"][0]
        matches = (fields["python"] == fields["compiled"]).all()
        print(f"speedup: {speedup:.1f}x; states identical: {'yes' if matches else 'NO'}")
        if not matches:
            return 1
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="symfv",
        description="Finite-volume Euler solver with mirror-symmetric arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="advance a benchmark and dump field/audit/conservation")
    _add_problem_args(p_run)
    p_run.add_argument("--out", default="out", help="output directory")
    p_run.add_argument("--snap-every", type=float, default=None, help="snapshot interval")
    p_run.set_defaults(func=cmd_run, parser=p_run)

    p_audit = sub.add_parser("audit", help="audit a field dump for one mirror symmetry")
    p_audit.add_argument("file", help="field dump path")
    p_audit.add_argument("--type", required=True, choices=_SYMMETRY_CHOICES)
    p_audit.set_defaults(func=cmd_audit, parser=p_audit)

    p_conv = sub.add_parser("convergence", help="grid-refinement study on the 1D advection harness")
    p_conv.add_argument("--grids", default="32,64,128,256")
    p_conv.add_argument("--variant", choices=sorted(_VARIANTS), default="symmetric")
    p_conv.set_defaults(func=cmd_convergence, parser=p_conv)

    p_sel = sub.add_parser("selection-map", help="dump the reconstruction-selection label map")
    _add_problem_args(p_sel)
    p_sel.add_argument("--axis", choices=("x", "y"), default="x", help="sweep direction to record")
    p_sel.add_argument("--out", default="selection.sfs", help="output file")
    p_sel.set_defaults(func=cmd_selection_map, parser=p_sel)

    p_bench = sub.add_parser("bench", help="compare compiled and pure-Python sweep kernels")
    p_bench.add_argument("--bench", choices=sorted(BENCHMARKS), default="riemann3")
    p_bench.add_argument("--nx", type=int, default=64)
    p_bench.add_argument("--ny", type=int, default=64)
    p_bench.add_argument("--steps", type=int, default=4)
    p_bench.add_argument("--threads", type=int, default=1)
    p_bench.set_defaults(func=cmd_bench, parser=p_bench)

    args = parser.parse_args(argv)
    return args.func(args.parser, args)


if __name__ == "__main__":
    raise SystemExit(main())
