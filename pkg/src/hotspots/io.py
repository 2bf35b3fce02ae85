"""CSV trajectories, query files, and JSON-lines / TSV answer records."""
from __future__ import annotations

import json
import math

from .trajectory import Square, Trajectory, TrajectoryError, Window, Witness

HEADER = "t,x,y"


class DataError(ValueError):
    """Malformed input file; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_trajectory(text: str) -> Trajectory:
    """Parse ``t,x,y`` rows (optional header line) into a trajectory."""
    times: list[float] = []
    xs: list[float] = []
    ys: list[float] = []
    seen_row = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if not seen_row and line.replace(" ", "").lower() == HEADER:
            seen_row = True
            continue
        seen_row = True
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3:
            raise DataError(f"expected 3 comma-separated fields, got {len(parts)}", lineno)
        try:
            t, x, y = (float(p) for p in parts)
        except ValueError:
            raise DataError(f"not a decimal row: {line!r}", lineno) from None
        if not all(math.isfinite(v) for v in (t, x, y)):
            raise DataError("non-finite value", lineno)
        if times and t <= times[-1]:
            raise DataError(f"non-increasing time {t} (previous {times[-1]})", lineno)
        times.append(t)
        xs.append(x)
        ys.append(y)
    if not times:
        raise DataError("empty trajectory file")
    try:
        return Trajectory(times, xs, ys)
    except TrajectoryError as exc:  # pragma: no cover - rows were already checked
        raise DataError(str(exc)) from exc


def format_trajectory(T: Trajectory, header: bool = True) -> str:
    rows = [HEADER] if header else []
    for t, x, y in zip(T.times.tolist(), T.xs.tolist(), T.ys.tolist()):
        rows.append(f"{t:.17g},{x:.17g},{y:.17g}")
    return "\n".join(rows) + "\n"


def parse_queries(text: str) -> list[tuple[float, float]]:
    """Two whitespace-separated times per line; blank lines are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise DataError(f"expected 2 times, got {len(parts)}", lineno)
        try:
            x, y = float(parts[0]), float(parts[1])
        except ValueError:
            raise DataError(f"not a time pair: {raw.strip()!r}", lineno) from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise DataError("non-finite time", lineno)
        if x > y:
            raise DataError(f"window start {x} is after end {y}", lineno)
        out.append((x, y))
    return out


def witness_record(window: Window, wit: Witness) -> dict:
    sq = wit.square
    return {
        "window": [window.start, window.end],
        "score": wit.score,
        "interval": [wit.interval.start, wit.interval.end],
        "square": {"x": sq.anchor_x, "y": sq.anchor_y, "side": sq.side},
    }


def record_from_json(line: str) -> tuple[Window, Witness]:
    """Inverse of :func:`witness_record` on one JSON line."""
    rec = json.loads(line)
    sq = rec["square"]
    a, b = rec["interval"]
    wit = Witness(Square(sq["x"], sq["y"], sq["side"]), Window(a, b), rec["score"])
    return Window(*rec["window"]), wit


TSV_COLUMNS = (
    "window_start", "window_end", "score", "interval_start", "interval_end",
    "square_x", "square_y", "side",
)


def format_record(rec: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rec)
    if fmt == "tsv":
        sq = rec["square"]
        vals = (*rec["window"], rec["score"], *rec["interval"], sq["x"], sq["y"], sq["side"])
        return "\t".join(repr(float(v)) for v in vals)
    raise ValueError(f"unknown output format {fmt!r}")
