"""Selects the compiled sweep kernel, falling back to the pure-Python one.

Set ``SYMFV_BACKEND=python`` or ``SYMFV_BACKEND=compiled`` to force a choice;
the default ``auto`` prefers the compiled extension when it imported cleanly.
Both backends are bit-for-bit interchangeable; ``use`` switches between them
at runtime (the performance comparison command relies on this).
"""

from __future__ import annotations

import os


def _load_compiled():
    try:
        from . import _kernels

        return _kernels
    except ImportError:
        return None


def available() -> tuple[str, ...]:
    names = ["python"]
    if _load_compiled() is not None:
        names.insert(0, "compiled")
    return tuple(names)


def use(name: str) -> None:
    """Bind ``sweep_lines``/``BACKEND`` to the named implementation."""
    global sweep_lines, BACKEND
    if name == "compiled":
        impl = _load_compiled()
        if impl is None:
            raise ImportError("compiled sweep kernel is not available")
    elif name == "python":
        from . import _sweep_py as impl
    else:
        raise ValueError(f"backend must be 'compiled' or 'python', got {name!r}")
    sweep_lines = impl.sweep_lines
    BACKEND = name


def _initial_choice() -> str:
    choice = os.environ.get("SYMFV_BACKEND", "auto")
    if choice not in ("auto", "compiled", "python"):
        raise ValueError(f"SYMFV_BACKEND must be auto/compiled/python, got {choice!r}")
    if choice == "auto":
        return "compiled" if _load_compiled() is not None else "python"
    return choice


use(_initial_choice())
