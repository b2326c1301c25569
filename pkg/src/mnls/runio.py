"""Run artifacts on disk: series CSV, event log, metadata, field snapshots.

Every writer goes through a temp-file-plus-rename so a crash never leaves
a half-written artifact, and all float formatting uses Python's shortest
round-trip repr so reruns of the same configuration are byte-identical.

Snapshot layout (all little-endian):

    bytes 0..3   magic "MNLS"
    uint64       format version (currently 1)
    uint64       dim
    uint64 * dim nodes per axis
    float64      half-width L
    float64      field time stamp
    payload      interleaved Re/Im float64 pairs, row-major node order
"""

from __future__ import annotations

import json
import os
import struct
import tempfile
from pathlib import Path

import numpy as np

from .diagnostics import SERIES_COLUMNS
from .errors import EmptySeries, MissingColumn
from .lattice import ComplexField, make_grid

__all__ = [
    "atomic_write_bytes",
    "atomic_write_text",
    "write_snapshot",
    "read_snapshot",
    "write_series_csv",
    "read_series_csv",
    "write_events_jsonl",
    "write_meta_json",
]

SNAPSHOT_MAGIC = b"MNLS"
SNAPSHOT_VERSION = 1


def atomic_write_bytes(path: str | Path, data: bytes) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def atomic_write_text(path: str | Path, text: str) -> None:
    atomic_write_bytes(path, text.encode("utf-8"))


def write_snapshot(path: str | Path, field: ComplexField) -> None:
    g = field.grid
    header = SNAPSHOT_MAGIC + struct.pack("<QQ", SNAPSHOT_VERSION, g.dim)
    header += struct.pack("<" + "Q" * g.dim, *([g.n] * g.dim))
    header += struct.pack("<dd", g.half_width, field.time)
    flat = np.empty(2 * field.values.size, dtype="<f8")
    flat[0::2] = field.values.real.ravel()
    flat[1::2] = field.values.imag.ravel()
    atomic_write_bytes(path, header + flat.tobytes())


def read_snapshot(path: str | Path) -> ComplexField:
    raw = Path(path).read_bytes()
    if raw[:4] != SNAPSHOT_MAGIC:
        raise ValueError(f"{path}: not a field snapshot (bad magic)")
    version, dim = struct.unpack_from("<QQ", raw, 4)
    if version != SNAPSHOT_VERSION:
        raise ValueError(f"{path}: unsupported snapshot version {version}")
    off = 20
    ns = struct.unpack_from("<" + "Q" * dim, raw, off)
    off += 8 * dim
    half_width, time = struct.unpack_from("<dd", raw, off)
    off += 16
    grid = make_grid(dim, half_width, ns[0])
    count = 2 * int(np.prod(ns))
    flat = np.frombuffer(raw, dtype="<f8", count=count, offset=off)
    vals = (flat[0::2] + 1j * flat[1::2]).reshape(grid.shape)
    return ComplexField(grid, vals, time)


def _fmt(x: float) -> str:
    return repr(float(x))


def write_series_csv(path: str | Path, samples) -> None:
    lines = [",".join(SERIES_COLUMNS)]
    for s in samples:
        lines.append(",".join(_fmt(v) for v in s.as_row()))
    atomic_write_text(path, "\n".join(lines) + "\n")


def read_series_csv(path: str | Path) -> dict[str, np.ndarray]:
    """Columns of a series file as float arrays, keyed by header name."""
    text = Path(path).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise EmptySeries(f"{path}: no header")
    header = lines[0].split(",")
    rows = [ln.split(",") for ln in lines[1:]]
    if not rows:
        raise EmptySeries(f"{path}: header only, no data rows")
    cols = {}
    for j, name in enumerate(header):
        cols[name] = np.array([float(r[j]) for r in rows])
    return cols


def require_column(cols: dict[str, np.ndarray], name: str, path="series") -> np.ndarray:
    if name not in cols:
        raise MissingColumn(f"{path}: no column {name!r} (have {sorted(cols)})")
    return cols[name]


def write_events_jsonl(path: str | Path, events) -> None:
    lines = [json.dumps(e, sort_keys=True) for e in events]
    atomic_write_text(path, "\n".join(lines) + ("\n" if lines else ""))


def write_meta_json(path: str | Path, meta: dict) -> None:
    atomic_write_text(path, json.dumps(meta, sort_keys=True, indent=2) + "\n")
