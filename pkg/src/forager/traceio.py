"""Trace serialization: the canonical CSV format and plot-ready exports.

The CSV contract is exact: a fixed header, one row per iteration, reals
rendered with Python's shortest round-trip decimal representation, LF
newlines, and a single trailing newline. Two runs of the same (config,
seed) produce byte-identical files. All files are written atomically
(temp file in the destination directory, then rename).
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path
from typing import Iterable, Sequence

from .engine import TraceRow

TRACE_HEADER = ("t,E,s0,s1,k1,food,predator,tree,rock,sun,"
                "w_tree_ex,w_tree_in,w_rock_ex,w_rock_in,w_sun_ex,w_sun_in")

_INT_FIELDS = {"t", "food", "predator", "tree", "rock", "sun"}
_FIELDS = TRACE_HEADER.split(",")


def format_real(value: float) -> str:
    """Shortest decimal string that round-trips to the same double."""
    return repr(float(value))


def trace_to_csv(trace: Sequence[TraceRow]) -> str:
    lines = [TRACE_HEADER]
    for row in trace:
        cells = []
        for name in _FIELDS:
            value = getattr(row, name)
            cells.append(str(value) if name in _INT_FIELDS else format_real(value))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def atomic_write_text(destination, text: str) -> None:
    """Write text to ``destination`` via temp-file-plus-rename."""
    destination = Path(destination)
    destination.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=destination.parent,
                               prefix=destination.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as handle:
            handle.write(text)
        os.replace(tmp, destination)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def write_trace(trace: Sequence[TraceRow], destination) -> None:
    atomic_write_text(destination, trace_to_csv(trace))


def parse_trace_csv(text: str) -> list[TraceRow]:
    """Inverse of trace_to_csv; strict about the header."""
    lines = text.splitlines()
    if not lines or lines[0] != TRACE_HEADER:
        raise ValueError("not a trace file: bad or missing header")
    rows = []
    for line in lines[1:]:
        cells = line.split(",")
        if len(cells) != len(_FIELDS):
            raise ValueError(f"bad trace row: {line!r}")
        kwargs = {
            name: (int(cell) if name in _INT_FIELDS else float(cell))
            for name, cell in zip(_FIELDS, cells)
        }
        rows.append(TraceRow(**kwargs))
    return rows


def read_trace(path) -> list[TraceRow]:
    return parse_trace_csv(Path(path).read_text())


def presence_intervals(trace: Sequence[TraceRow], feature: str) -> list[tuple[int, int]]:
    """Maximal runs of iterations where ``feature`` is present, as
    inclusive (start, end) pairs; empty list if never present."""
    intervals: list[tuple[int, int]] = []
    start = None
    last_t = None
    for row in trace:
        present = getattr(row, feature)
        if present and start is None:
            start = row.t
        elif not present and start is not None:
            intervals.append((start, last_t))
            start = None
        last_t = row.t
    if start is not None:
        intervals.append((start, last_t))
    return intervals


def exploration_series(trace: Sequence[TraceRow]) -> list[tuple[int, float]]:
    return [(row.t, row.E) for row in trace]


def write_plotdata(trace: Sequence[TraceRow], out_dir) -> list[Path]:
    """Emit plot-ready files: the exploration series and, per feature,
    presence intervals in the figure bar-band convention."""
    out_dir = Path(out_dir)
    series_lines = ["t,E"]
    series_lines += [f"{t},{format_real(e)}" for t, e in exploration_series(trace)]
    series_path = out_dir / "exploration.csv"
    atomic_write_text(series_path, "\n".join(series_lines) + "\n")

    feature_lines = ["feature,start,end"]
    for feature in ("tree", "rock", "sun"):
        for start, end in presence_intervals(trace, feature):
            feature_lines.append(f"{feature},{start},{end}")
    features_path = out_dir / "features.csv"
    atomic_write_text(features_path, "\n".join(feature_lines) + "\n")
    return [series_path, features_path]
