"""Per-vertex hot arrays and the range-argmax structures built over them.

For every vertex ``v`` the backward entry describes the longest sub-trajectory
ending at ``v`` that fits in an ``s x s`` square: its duration, its start time
(possibly mid-edge) and one containing square.  The forward entry is the same
for sub-trajectories starting at ``v`` and is computed by running the backward
pass on the time-reversed trajectory.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from .rmq import RangeArgmax
from .sliding import window_extrema
from .trajectory import EPS, BBox, PreconditionError, Square, Trajectory

Direction = Literal["backward", "forward"]


@dataclass(frozen=True)
class HotEntry:
    dur: float
    end: float
    square: Square


@dataclass
class BuildStats:
    """Sliding-queue counters of one pass (one queue per coordinate)."""

    n: int = 0
    pushes: dict = field(default_factory=dict)
    pops: dict = field(default_factory=dict)
    moves: dict = field(default_factory=dict)


def _solve_back(t0, x0, y0, t1, x1, y1, min_x, max_x, min_y, max_y, s):
    """Furthest fraction ``lam`` of edge (x1,y1)->(x0,y0) keeping both extents <= s."""
    lam = 1.0
    d = x0 - x1
    if d > 0:
        lam = min(lam, (min_x + s - x1) / d)
    elif d < 0:
        lam = min(lam, (max_x - s - x1) / d)
    d = y0 - y1
    if d > 0:
        lam = min(lam, (min_y + s - y1) / d)
    elif d < 0:
        lam = min(lam, (max_y - s - y1) / d)
    return max(lam, 0.0)


def extend_back(T: Trajectory, u_prev: Optional[int], u: int, box: BBox, s: float) -> tuple[float, Square]:
    """Earliest time on edge ``u_prev -> u`` from which the window still fits.

    ``box`` is the bounding box of the fitting vertex window that starts at ``u``.
    Returns the start time and a square containing the extended window.
    """
    t1, x1, y1 = float(T.times[u]), float(T.xs[u]), float(T.ys[u])
    if u_prev is None:
        return t1, Square(box.min_x, box.min_y, s)
    if u_prev != u - 1:
        raise PreconditionError(f"vertex {u_prev} does not precede vertex {u}")
    t0, x0, y0 = float(T.times[u_prev]), float(T.xs[u_prev]), float(T.ys[u_prev])
    lam = _solve_back(t0, x0, y0, t1, x1, y1, box.min_x, box.max_x, box.min_y, box.max_y, s)
    if lam == 0.0:
        return t1, Square(box.min_x, box.min_y, s)
    p = t0 if lam == 1.0 else t1 - lam * (t1 - t0)
    px, py = x1 + lam * (x0 - x1), y1 + lam * (y0 - y1)
    return p, Square(min(box.min_x, px), min(box.min_y, py), s)


def _backward_pass(times, xs, ys, s, use_jit=None):
    """Hot ends and square anchors for every vertex, plus the scan counters."""
    scan = window_extrema(xs, ys, s + EPS, use_jit=use_jit)
    u = scan.starts
    if len(u) > 1 and np.any(u[1:] < u[:-1]):
        raise AssertionError("window start moved backwards")
    up = np.maximum(u - 1, 0)
    t0, x0, y0 = times[up], xs[up], ys[up]
    t1, x1, y1 = times[u], xs[u], ys[u]
    lam = np.ones(len(u))
    with np.errstate(divide="ignore", invalid="ignore"):
        for p0, p1, lo, hi in ((x1, x0, scan.min_x, scan.max_x), (y1, y0, scan.min_y, scan.max_y)):
            d = p1 - p0
            lim = np.where(d > 0, (lo + s - p0) / d, np.where(d < 0, (hi - s - p0) / d, np.inf))
            lam = np.minimum(lam, lim)
    lam = np.where(u > 0, np.maximum(lam, 0.0), 0.0)
    ends = np.where(lam == 0.0, t1, np.where(lam == 1.0, t0, t1 - lam * (t1 - t0)))
    ax = np.minimum(scan.min_x, x1 + lam * (x0 - x1))
    ay = np.minimum(scan.min_y, y1 + lam * (y0 - y1))
    stats = BuildStats(len(u), scan.pushes, scan.pops, scan.moves)
    return ends, ax, ay, stats


class _EntryView:
    """Read-only sequence of HotEntry values over one direction's arrays."""

    def __init__(self, arrays: "HotArrays", direction: Direction):
        self._arrays = arrays
        self._direction = direction

    def __len__(self) -> int:
        return len(self._arrays)

    def __getitem__(self, k: int) -> HotEntry:
        if not -len(self) <= k < len(self):
            raise IndexError(k)
        return self._arrays.entry(self._direction, k % len(self))

    def __iter__(self):
        return (self[k] for k in range(len(self)))


class HotArrays:
    """Backward and forward hot entries for every vertex, stored column-wise."""

    def __init__(self, side, back_end, back_ax, back_ay, fwd_end, fwd_ax, fwd_ay, times, stats=None):
        self.side = float(side)
        self.times = times
        self.back_end = np.asarray(back_end, dtype=np.float64)
        self.back_ax = np.asarray(back_ax, dtype=np.float64)
        self.back_ay = np.asarray(back_ay, dtype=np.float64)
        self.fwd_end = np.asarray(fwd_end, dtype=np.float64)
        self.fwd_ax = np.asarray(fwd_ax, dtype=np.float64)
        self.fwd_ay = np.asarray(fwd_ay, dtype=np.float64)
        self.back_dur = times - self.back_end
        self.fwd_dur = self.fwd_end - times
        for arr in (self.back_end, self.back_ax, self.back_ay, self.back_dur,
                    self.fwd_end, self.fwd_ax, self.fwd_ay, self.fwd_dur):
            arr.setflags(write=False)
        self.stats: dict[str, BuildStats] = stats or {}

    def __len__(self) -> int:
        return len(self.times)

    def entry(self, direction: Direction, k: int) -> HotEntry:
        if direction == "backward":
            return HotEntry(float(self.back_dur[k]), float(self.back_end[k]),
                            Square(float(self.back_ax[k]), float(self.back_ay[k]), self.side))
        if direction == "forward":
            return HotEntry(float(self.fwd_dur[k]), float(self.fwd_end[k]),
                            Square(float(self.fwd_ax[k]), float(self.fwd_ay[k]), self.side))
        raise ValueError(f"unknown direction {direction!r}")

    @property
    def backward(self) -> _EntryView:
        return _EntryView(self, "backward")

    @property
    def forward(self) -> _EntryView:
        return _EntryView(self, "forward")


def build_hot_arrays(T: Trajectory, s: float, use_jit: bool | None = None) -> HotArrays:
    if not s > 0:
        raise PreconditionError(f"side length must be positive, got {s}")
    back_end, back_ax, back_ay, back_stats = _backward_pass(T.times, T.xs, T.ys, s, use_jit)
    rev_t = -T.times[::-1]
    r_end, r_ax, r_ay, fwd_stats = _backward_pass(rev_t, T.xs[::-1], T.ys[::-1], s, use_jit)
    return HotArrays(
        s, back_end, back_ax, back_ay, -r_end[::-1], r_ax[::-1], r_ay[::-1], T.times,
        stats={"backward": back_stats, "forward": fwd_stats},
    )


class HotRanges:
    """Range-argmax of hot durations in both directions."""

    def __init__(self, arrays: HotArrays):
        self.arrays = arrays
        self.backward = RangeArgmax(arrays.back_dur)
        self.forward = RangeArgmax(arrays.fwd_dur)

    def argmax(self, direction: Direction, i: int, j: int) -> int:
        if direction == "backward":
            return self.backward.query(i, j)
        if direction == "forward":
            return self.forward.query(i, j)
        raise ValueError(f"unknown direction {direction!r}")


def hot_range(ranges: HotRanges, direction: Direction, i: int, j: int) -> tuple[int, HotEntry]:
    """Vertex in ``[i, j]`` with the longest hot window in ``direction``, and its entry."""
    if not 0 <= i <= j < len(ranges.arrays):
        raise IndexError(f"invalid vertex range [{i}, {j}]")
    k = ranges.argmax(direction, i, j)
    return k, ranges.arrays.entry(direction, k)
