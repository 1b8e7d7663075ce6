"""Binary dump formats for fields and reconstruction-selection maps.

Both formats share a 36-byte header (magic, nx, ny, time, dx, dy) followed by
raw little-endian planes of the interior cells, row-major with x fastest.
Binary rather than text because the whole point of these files is auditing
bit-exactness; a write-then-read round trip reproduces every byte.

- field dump (magic ``SFV1``): four float64 planes, rho / rho*u / rho*v / E;
  total size 36 + 32*nx*ny bytes.
- selection dump (magic ``SFS1``): four int8 planes, one per characteristic
  field in wave order (u-c, u, u+c, transverse), values 0/1/2 for the smooth
  polynomial / sharp / smoothed-sharp candidate; 36 + 4*nx*ny bytes.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import MalformedDump

_HEADER = struct.Struct("<4sIIddd")
FIELD_MAGIC = b"SFV1"
SELECTION_MAGIC = b"SFS1"


@dataclass(frozen=True)
class FieldDump:
    nx: int
    ny: int
    time: float
    dx: float
    dy: float
    data: np.ndarray  # (4, ny, nx) float64


@dataclass(frozen=True)
class SelectionDump:
    nx: int
    ny: int
    time: float
    dx: float
    dy: float
    labels: np.ndarray  # (4, ny, nx) int8, wave-component major


def _pack_header(magic: bytes, nx: int, ny: int, time: float, dx: float, dy: float) -> bytes:
    return _HEADER.pack(magic, nx, ny, time, dx, dy)


def _read_header(raw: bytes, path: Path, magic: bytes) -> tuple[int, int, float, float, float]:
    if len(raw) < _HEADER.size:
        raise MalformedDump(f"{path}: truncated header ({len(raw)} bytes)")
    tag, nx, ny, time, dx, dy = _HEADER.unpack_from(raw)
    if tag != magic:
        raise MalformedDump(f"{path}: bad magic {tag!r}, expected {magic!r}")
    if nx < 1 or ny < 1:
        raise MalformedDump(f"{path}: bad dimensions {nx} x {ny}")
    if not (dx > 0.0 and dy > 0.0):
        raise MalformedDump(f"{path}: bad cell sizes dx={dx!r} dy={dy!r}")
    return nx, ny, time, dx, dy


def write_field_dump(
    path: str | Path, field: np.ndarray, time: float, dx: float, dy: float
) -> None:
    """Write a (4, ny, nx) float64 interior field."""
    field = np.ascontiguousarray(field, dtype="<f8")
    if field.ndim != 3 or field.shape[0] != 4:
        raise MalformedDump(f"expected a (4, ny, nx) field, got {field.shape}")
    ny, nx = field.shape[1], field.shape[2]
    with open(path, "wb") as handle:
        handle.write(_pack_header(FIELD_MAGIC, nx, ny, time, dx, dy))
        handle.write(field.tobytes())


def read_field_dump(path: str | Path) -> FieldDump:
    path = Path(path)
    raw = path.read_bytes()
    nx, ny, time, dx, dy = _read_header(raw, path, FIELD_MAGIC)
    expected = _HEADER.size + 32 * nx * ny
    if len(raw) != expected:
        raise MalformedDump(f"{path}: size {len(raw)}, expected {expected} for {nx} x {ny}")
    data = (
        np.frombuffer(raw, dtype="<f8", offset=_HEADER.size)
        .reshape(4, ny, nx)
        .astype(np.float64)
    )
    return FieldDump(nx=nx, ny=ny, time=time, dx=dx, dy=dy, data=data)


def write_selection_dump(
    path: str | Path, labels: np.ndarray, time: float, dx: float, dy: float
) -> None:
    """Write a (4, ny, nx) int8 selection-label map."""
    labels = np.ascontiguousarray(labels, dtype=np.int8)
    if labels.ndim != 3 or labels.shape[0] != 4:
        raise MalformedDump(f"expected a (4, ny, nx) label map, got {labels.shape}")
    ny, nx = labels.shape[1], labels.shape[2]
    with open(path, "wb") as handle:
        handle.write(_pack_header(SELECTION_MAGIC, nx, ny, time, dx, dy))
        handle.write(labels.tobytes())


def read_selection_dump(path: str | Path) -> SelectionDump:
    path = Path(path)
    raw = path.read_bytes()
    nx, ny, time, dx, dy = _read_header(raw, path, SELECTION_MAGIC)
    expected = _HEADER.size + 4 * nx * ny
    if len(raw) != expected:
        raise MalformedDump(f"{path}: size {len(raw)}, expected {expected} for {nx} x {ny}")
    labels = (
        np.frombuffer(raw, dtype=np.int8, offset=_HEADER.size)
        .reshape(4, ny, nx)
        .copy()
    )
    return SelectionDump(nx=nx, ny=ny, time=time, dx=dx, dy=dy, labels=labels)
