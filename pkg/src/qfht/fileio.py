"""Plain-text formats used by the command line.

Signals are CSV rows ``x,w,qw,qx,qy,qz``; coefficient lists are JSON arrays
of ``[w, x, y, z]``; kernel tables are CSV rows
``x,y,Re,I-part,unit-x,unit-y,unit-z``.  Floats are written with 17
significant digits so that a write/read cycle is bit-exact.
"""
from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable, TextIO

import numpy as np

__all__ = [
    "SIGNAL_HEADER",
    "KERNEL_HEADER",
    "format_float",
    "write_signal_csv",
    "read_signal_csv",
    "write_coeffs_json",
    "read_coeffs_json",
    "write_kernel_csv",
]

SIGNAL_HEADER = ("x", "w", "qw", "qx", "qy", "qz")
KERNEL_HEADER = ("x", "y", "Re", "I-part", "unit-x", "unit-y", "unit-z")


def format_float(v: float) -> str:
    return format(float(v), ".17g")


def _write_rows(target: Path | str | TextIO, header: Iterable[str], rows: np.ndarray) -> None:
    """Write CSV to a path, or to an already open text stream."""
    if hasattr(target, "write"):
        _emit(target, header, rows)
        return
    with open(target, "w", newline="") as fh:
        _emit(fh, header, rows)


def _emit(fh: TextIO, header: Iterable[str], rows: np.ndarray) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) for v in row])


def write_signal_csv(path: Path | str, nodes, weights, values) -> None:
    """Write one row per node: node, weight and the four sample components."""
    rows = np.column_stack([np.asarray(nodes), np.asarray(weights), np.asarray(values).reshape(-1, 4)])
    _write_rows(path, SIGNAL_HEADER, rows)


def read_signal_csv(path: Path | str) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Read a signal file; returns ``(nodes, weights, values)``.

    A header line is optional.  Raises :class:`ValueError` on malformed rows.
    """
    rows = []
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or all(not c.strip() for c in row):
                continue
            if lineno == 1 and row[0].strip() == SIGNAL_HEADER[0]:
                continue
            if len(row) != 6:
                raise ValueError(f"{path}:{lineno}: expected 6 columns, got {len(row)}")
            try:
                rows.append([float(c) for c in row])
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    if not rows:
        raise ValueError(f"{path}: no data rows")
    data = np.array(rows)
    return data[:, 0], data[:, 1], data[:, 2:6]


def write_coeffs_json(path: Path | str, coeffs) -> None:
    coeffs = np.asarray(coeffs, dtype=float).reshape(-1, 4)
    # json.dumps uses repr for floats, which round-trips exactly
    text = json.dumps([[float(v) for v in row] for row in coeffs])
    Path(path).write_text(text + "\n")


def read_coeffs_json(path: Path | str) -> np.ndarray:
    """Read a JSON array of ``[w, x, y, z]`` quadruples as an ``(N+1, 4)`` array."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(data, list) or not data:
        raise ValueError(f"{path}: expected a non-empty JSON array")
    out = np.empty((len(data), 4))
    for n, entry in enumerate(data):
        if not isinstance(entry, list) or len(entry) != 4:
            raise ValueError(f"{path}: entry {n} is not a [w, x, y, z] quadruple")
        out[n] = [float(v) for v in entry]
    return out


def write_kernel_csv(path: Path | str | TextIO, xs, ys, values, unit) -> None:
    """Kernel table rows: ``x, y`` and the slice coordinates of the value.

    ``values`` are complex numbers in the slice spanned by ``1`` and ``unit``.
    """
    values = np.asarray(values, dtype=complex).ravel()
    n = values.size
    u = np.broadcast_to(np.asarray(unit, dtype=float), (n, 3))
    rows = np.column_stack([np.asarray(xs).ravel(), np.asarray(ys).ravel(), values.real, values.imag, u])
    _write_rows(path, KERNEL_HEADER, rows)
