"""Trajectories, squares, and the geometric primitives shared by the index and the oracle.

A trajectory is a sequence of time-stamped points joined by straight edges;
the location between two vertices is linearly interpolated.  All squares are
axis-parallel, closed, and share one side length.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

EPS = 1e-9


class TrajectoryError(ValueError):
    """Raised for invalid trajectory input (non-finite values, bad time order)."""


class OutOfRangeError(ValueError):
    """Raised when a time lies outside the trajectory's span."""


class PreconditionError(ValueError):
    """Raised when an operation is called outside its domain."""


@dataclass(frozen=True)
class Vertex:
    tstamp: float
    x: float
    y: float

    @property
    def loc(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class BBox:
    min_x: float
    max_x: float
    min_y: float
    max_y: float

    @classmethod
    def of_point(cls, x: float, y: float) -> "BBox":
        return cls(x, x, y, y)

    @property
    def width(self) -> float:
        return self.max_x - self.min_x

    @property
    def height(self) -> float:
        return self.max_y - self.min_y

    def union_point(self, x: float, y: float) -> "BBox":
        return BBox(min(self.min_x, x), max(self.max_x, x), min(self.min_y, y), max(self.max_y, y))


@dataclass(frozen=True)
class Square:
    """Closed square ``[anchor_x, anchor_x + side] x [anchor_y, anchor_y + side]``."""

    anchor_x: float
    anchor_y: float
    side: float

    def __post_init__(self):
        if not self.side > 0:
            raise PreconditionError(f"square side must be positive, got {self.side}")

    def contains(self, x: float, y: float, eps: float = EPS) -> bool:
        return (
            self.anchor_x - eps <= x <= self.anchor_x + self.side + eps
            and self.anchor_y - eps <= y <= self.anchor_y + self.side + eps
        )

    def contains_bbox(self, box: BBox, eps: float = EPS) -> bool:
        return self.contains(box.min_x, box.min_y, eps) and self.contains(box.max_x, box.max_y, eps)


@dataclass(frozen=True)
class Window:
    start: float
    end: float

    def __post_init__(self):
        if not self.start <= self.end:
            raise PreconditionError(f"window start {self.start} is after end {self.end}")

    @property
    def duration(self) -> float:
        return self.end - self.start

    def contains(self, other: "Window", eps: float = EPS) -> bool:
        return self.start - eps <= other.start and other.end <= self.end + eps


@dataclass(frozen=True)
class Witness:
    """A square together with a time interval whose sub-trajectory it contains.

    ``score`` is the interval's duration, a certified lower bound on the
    square's weight.
    """

    square: Square
    interval: Window
    score: float

    @classmethod
    def of_interval(cls, square: Square, start: float, end: float) -> "Witness":
        return cls(square, Window(start, end), end - start)


class Trajectory:
    """Immutable polygonal trajectory backed by three float64 arrays."""

    __slots__ = ("times", "xs", "ys")

    def __init__(self, times, xs, ys):
        times = np.array(times, dtype=np.float64)
        xs = np.array(xs, dtype=np.float64)
        ys = np.array(ys, dtype=np.float64)
        if times.ndim != 1 or times.shape != xs.shape or times.shape != ys.shape:
            raise TrajectoryError("times, xs and ys must be 1-d arrays of equal length")
        if len(times) == 0:
            raise TrajectoryError("a trajectory needs at least one vertex")
        for name, arr in (("time", times), ("x", xs), ("y", ys)):
            bad = np.flatnonzero(~np.isfinite(arr))
            if len(bad):
                raise TrajectoryError(f"non-finite {name} at vertex {int(bad[0])}")
        bad = np.flatnonzero(np.diff(times) <= 0)
        if len(bad):
            raise TrajectoryError(f"time-stamps not strictly increasing at vertex {int(bad[0]) + 1}")
        for arr in (times, xs, ys):
            arr.setflags(write=False)
        self.times = times
        self.xs = xs
        self.ys = ys

    @classmethod
    def from_vertices(cls, vertices: Iterable[Vertex | Sequence[float]]) -> "Trajectory":
        rows = []
        for v in vertices:
            if isinstance(v, Vertex):
                rows.append((v.tstamp, v.x, v.y))
            else:
                t, x, y = v
                rows.append((t, x, y))
        if not rows:
            raise TrajectoryError("a trajectory needs at least one vertex")
        t, x, y = zip(*rows)
        return cls(t, x, y)

    def __len__(self) -> int:
        return len(self.times)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Trajectory):
            return NotImplemented
        return (
            np.array_equal(self.times, other.times)
            and np.array_equal(self.xs, other.xs)
            and np.array_equal(self.ys, other.ys)
        )

    def __repr__(self) -> str:
        return f"Trajectory(n={len(self)}, span=[{self.start}, {self.end}])"

    def vertex(self, i: int) -> Vertex:
        return Vertex(float(self.times[i]), float(self.xs[i]), float(self.ys[i]))

    @property
    def vertices(self) -> list[Vertex]:
        return [self.vertex(i) for i in range(len(self))]

    @property
    def start(self) -> float:
        return float(self.times[0])

    @property
    def end(self) -> float:
        return float(self.times[-1])

    @property
    def span(self) -> Window:
        return Window(self.start, self.end)

    def reversed(self) -> "Trajectory":
        """Time-reversed copy with negated time-stamps."""
        return Trajectory(-self.times[::-1], self.xs[::-1], self.ys[::-1])

    def locate(self, t: float) -> tuple[float, float]:
        return locate(self, t)


def locate(T: Trajectory, t: float) -> tuple[float, float]:
    """Position of the entity at time ``t``."""
    times = T.times
    if not times[0] <= t <= times[-1]:
        raise OutOfRangeError(f"time {t} outside trajectory span [{T.start}, {T.end}]")
    k = int(np.searchsorted(times, t, side="right")) - 1
    if times[k] == t or k == len(times) - 1:
        return float(T.xs[k]), float(T.ys[k])
    t0, t1 = times[k], times[k + 1]
    lam = (t - t0) / (t1 - t0)
    x0, y0 = T.xs[k], T.ys[k]
    return float(x0 + lam * (T.xs[k + 1] - x0)), float(y0 + lam * (T.ys[k + 1] - y0))


def _check_window(T: Trajectory, w: Window) -> None:
    if w.start < T.times[0] or w.end > T.times[-1]:
        raise OutOfRangeError(f"window [{w.start}, {w.end}] outside trajectory span [{T.start}, {T.end}]")


def clamp_window(T: Trajectory, x: float, y: float) -> Window:
    """Window ``[x, y]`` clamped into the trajectory's span."""
    if x > y:
        raise PreconditionError(f"window start {x} is after end {y}")
    lo, hi = T.start, T.end
    return Window(min(max(x, lo), hi), min(max(y, lo), hi))


def interior_range(T: Trajectory, w: Window) -> tuple[int, int]:
    """Index range ``[lo, hi)`` of vertices with time-stamps strictly inside ``w``."""
    lo = int(np.searchsorted(T.times, w.start, side="right"))
    hi = int(np.searchsorted(T.times, w.end, side="left"))
    return lo, max(lo, hi)


def subtrajectory_bbox(T: Trajectory, w: Window) -> BBox:
    _check_window(T, w)
    ax, ay = locate(T, w.start)
    bx, by = locate(T, w.end)
    box = BBox(min(ax, bx), max(ax, bx), min(ay, by), max(ay, by))
    lo, hi = interior_range(T, w)
    if hi > lo:
        xs, ys = T.xs[lo:hi], T.ys[lo:hi]
        box = BBox(
            min(box.min_x, float(xs.min())),
            max(box.max_x, float(xs.max())),
            min(box.min_y, float(ys.min())),
            max(box.max_y, float(ys.max())),
        )
    return box


def fits(b: BBox, s: float, eps: float = EPS) -> bool:
    return b.width <= s + eps and b.height <= s + eps


def covering_square(b: BBox, s: float) -> Square:
    if not fits(b, s):
        raise PreconditionError(f"box of extent {b.width} x {b.height} does not fit in side {s}")
    return Square(b.min_x, b.min_y, s)


def point_witness(T: Trajectory, t: float, s: float) -> Witness:
    x, y = locate(T, t)
    return Witness(Square(x, y, s), Window(t, t), 0.0)


def edge_hotspot(T: Trajectory, w: Window, s: float) -> Witness:
    """Best witness for a window lying on a single edge.

    Constant speed on an edge makes every placement of the fitting sub-segment
    equally long, so the interval always starts at ``w.start``.
    """
    _check_window(T, w)
    lo, hi = interior_range(T, w)
    if hi > lo:
        raise PreconditionError(f"window [{w.start}, {w.end}] spans vertex {lo}")
    d = w.duration
    ax, ay = locate(T, w.start)
    if d == 0:
        return Witness(Square(ax, ay, s), w, 0.0)
    bx, by = locate(T, w.end)
    dx, dy = bx - ax, by - ay
    ratio = 1.0
    if dx != 0:
        ratio = min(ratio, s / abs(dx))
    if dy != 0:
        ratio = min(ratio, s / abs(dy))
    if ratio >= 1.0:
        end = w.end
        ex, ey = bx, by
    else:
        end = min(w.start + d * ratio, w.end)
        ex, ey = ax + ratio * dx, ay + ratio * dy
    box = BBox(min(ax, ex), max(ax, ex), min(ay, ey), max(ay, ey))
    return Witness.of_interval(covering_square(box, s), w.start, end)


def _clip_segment(ax, ay, bx, by, r: Square, eps: float) -> tuple[float, float] | None:
    """Parameter interval ``[l0, l1]`` of segment a->b inside the (eps-grown) square."""
    l0, l1 = 0.0, 1.0
    for p0, d, lo, hi in (
        (ax, bx - ax, r.anchor_x - eps, r.anchor_x + r.side + eps),
        (ay, by - ay, r.anchor_y - eps, r.anchor_y + r.side + eps),
    ):
        if d == 0:
            if p0 < lo or p0 > hi:
                return None
            continue
        u0, u1 = (lo - p0) / d, (hi - p0) / d
        if u0 > u1:
            u0, u1 = u1, u0
        l0, l1 = max(l0, u0), min(l1, u1)
        if l0 > l1:
            return None
    return l0, l1


def inside_intervals(T: Trajectory, w: Window, r: Square, eps: float = EPS) -> list[tuple[float, float]]:
    """Maximal time intervals within ``w`` during which the trajectory is inside ``r``."""
    _check_window(T, w)
    if w.duration == 0:
        x, y = locate(T, w.start)
        return [(w.start, w.start)] if r.contains(x, y, eps) else []
    lo, hi = interior_range(T, w)
    cuts = [w.start, *T.times[lo:hi].tolist(), w.end]
    runs: list[tuple[float, float]] = []
    prev = locate(T, cuts[0])
    for ta, tb in zip(cuts, cuts[1:]):
        nxt = locate(T, tb)
        clip = _clip_segment(prev[0], prev[1], nxt[0], nxt[1], r, eps)
        prev = nxt
        if clip is None:
            continue
        l0, l1 = clip
        s0 = ta if l0 == 0.0 else ta + l0 * (tb - ta)
        s1 = tb if l1 == 1.0 else ta + l1 * (tb - ta)
        if runs and runs[-1][1] == ta and l0 == 0.0:
            runs[-1] = (runs[-1][0], s1)
        else:
            runs.append((s0, s1))
    return runs


def weight_of_square(T: Trajectory, w: Window, r: Square, eps: float = EPS) -> float:
    """Longest single stretch of ``w`` during which the trajectory stays in ``r``."""
    runs = inside_intervals(T, w, r, eps)
    return max((b - a for a, b in runs), default=0.0)
