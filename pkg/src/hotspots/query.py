"""Time-windowed hotspot queries over a preprocessed trajectory.

Every answer is a :class:`~hotspots.trajectory.Witness` whose interval lies in
the query window and whose square contains the sub-trajectory over that
interval; its score is at least half the weight of the window's hotspot.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass, field

from .preprocess import HotArrays, HotRanges, build_hot_arrays
from .trajectory import (
    PreconditionError,
    Square,
    Trajectory,
    Window,
    Witness,
    clamp_window,
    edge_hotspot,
)


@dataclass
class QueryTrace:
    """Case taken at each level of the vertex-aligned recursion, outermost first.

    Labels: ``edge`` and ``point`` for base cases, ``a`` when both hot squares
    cover the opposite half, ``b`` when neither does, ``c-left``/``c-right`` when
    exactly one does and the uncovered half is searched next.
    """

    cases: list[str] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.cases)


class HotspotIndex:
    """Immutable query structure for one trajectory and one side length."""

    def __init__(self, trajectory: Trajectory, side: float, arrays: HotArrays):
        self.trajectory = trajectory
        self.side = float(side)
        self.arrays = arrays
        self.ranges = HotRanges(arrays)
        self._times = trajectory.times.tolist()
        # hot ends are non-decreasing along the trajectory; lists allow bisect
        self._back_end = arrays.back_end.tolist()
        self._fwd_end = arrays.fwd_end.tolist()

    def __len__(self) -> int:
        return len(self.trajectory)

    # candidates are (score, start, end, anchor_x, anchor_y)

    def _backward_candidate(self, k: int, lo: float):
        a = self.arrays
        t = self._times[k]
        start = max(self._back_end[k], lo)
        return (t - start, start, t, float(a.back_ax[k]), float(a.back_ay[k]))

    def _forward_candidate(self, k: int, hi: float):
        a = self.arrays
        t = self._times[k]
        end = min(self._fwd_end[k], hi)
        return (end - t, t, end, float(a.fwd_ax[k]), float(a.fwd_ay[k]))

    def _best_backward(self, i: int, j: int, lo: float):
        """Exact best backward candidate over vertices i..j, clipped at ``lo``.

        Vertices whose hot window reaches back past ``lo`` form a prefix; in it
        the last vertex wins, and beyond it the clip is inactive.
        """
        cut = bisect.bisect_right(self._back_end, lo, i, j + 1)
        best = self._backward_candidate(cut - 1, lo) if cut > i else None
        if cut <= j:
            cand = self._backward_candidate(self.ranges.backward.query(cut, j), lo)
            if best is None or cand[0] > best[0]:
                best = cand
        return best

    def _best_forward(self, i: int, j: int, hi: float):
        """Exact best forward candidate over vertices i..j, clipped at ``hi``."""
        cut = bisect.bisect_left(self._fwd_end, hi, i, j + 1)
        best = self._forward_candidate(self.ranges.forward.query(i, cut - 1), hi) if cut > i else None
        if cut <= j:
            cand = self._forward_candidate(cut, hi)
            if best is None or cand[0] > best[0]:
                best = cand
        return best

    def _edge_candidate(self, start: float, end: float):
        wit = edge_hotspot(self.trajectory, Window(start, end), self.side)
        return (wit.score, wit.interval.start, wit.interval.end, wit.square.anchor_x, wit.square.anchor_y)

    def _point_candidate(self, k: int):
        t = self._times[k]
        return (0.0, t, t, float(self.trajectory.xs[k]), float(self.trajectory.ys[k]))

    def _witness(self, cand) -> Witness:
        score, start, end, ax, ay = cand
        return Witness(Square(ax, ay, self.side), Window(start, end), score)

    def _aligned(self, i: int, j: int, lo: float, hi: float, trace: QueryTrace | None):
        """Best candidate for the window between vertices i and j.

        Candidates are clipped to ``[lo, hi]`` (which contains the vertex
        window) rather than to the vertex window itself.
        """
        times = self._times
        back_end, fwd_end = self._back_end, self._fwd_end
        back_rmq, fwd_rmq = self.ranges.backward, self.ranges.forward
        best = None
        while True:
            if j == i:
                cand, case = self._point_candidate(i), "point"
            elif j == i + 1:
                cand, case = self._edge_candidate(times[i], times[j]), "edge"
            else:
                cand = None
            if cand is not None:
                if trace is not None:
                    trace.cases.append(case)
                if best is None or cand[0] > best[0]:
                    best = cand
                return best
            ti, tj = times[i], times[j]
            w = (i + j) // 2
            kb = back_rmq.query(w, j)
            kf = fwd_rmq.query(i, w)
            for cand in (self._backward_candidate(kb, lo), self._forward_candidate(kf, hi)):
                if best is None or cand[0] > best[0]:
                    best = cand
            # covers: the hot square already holds the whole other half
            back_covers = back_end[kb] <= ti
            fwd_covers = fwd_end[kf] >= tj
            if back_covers and fwd_covers:
                if trace is not None:
                    trace.cases.append("a")
                return best
            if not back_covers and not fwd_covers:
                if trace is not None:
                    trace.cases.append("b")
                # the two maxima above are exact on their own halves; add the
                # opposite halves so this leaf is exact on the whole window
                for cand in (self._best_backward(i, w, lo), self._best_forward(w, j, hi)):
                    if cand[0] > best[0]:
                        best = cand
                return best
            if back_covers:
                # forward maxima are exact on the left half; only windows inside [w, j] remain
                if trace is not None:
                    trace.cases.append("c-right")
                i = w
            else:
                if trace is not None:
                    trace.cases.append("c-left")
                j = w

    def query_vertex_aligned(self, i: int, j: int, trace: QueryTrace | None = None) -> Witness:
        n = len(self._times)
        if not 0 <= i <= j < n:
            raise IndexError(f"invalid vertex range [{i}, {j}] for {n} vertices")
        return self._witness(self._aligned(i, j, self._times[i], self._times[j], trace))

    def clamp(self, x: float, y: float) -> Window:
        return clamp_window(self.trajectory, x, y)

    def query(self, x: float, y: float, trace: QueryTrace | None = None) -> Witness:
        win = self.clamp(x, y)
        x, y = win.start, win.end
        times = self._times
        u = bisect.bisect_left(times, x)
        v = bisect.bisect_right(times, y) - 1
        if u > v:
            return edge_hotspot(self.trajectory, win, self.side)
        best = self._aligned(u, v, x, y, trace)
        # windows overhanging the first or last vertex pass through it
        for k in (u, v) if u != v else (u,):
            for cand in (self._backward_candidate(k, x), self._forward_candidate(k, y)):
                if cand[0] > best[0]:
                    best = cand
        return self._witness(best)

    def whole_trajectory_hotspot(self) -> Witness:
        return self.query(self._times[0], self._times[-1])


def build_index(T: Trajectory, s: float) -> HotspotIndex:
    if not isinstance(T, Trajectory):
        raise PreconditionError("build_index expects a Trajectory")
    if not s > 0:
        raise PreconditionError(f"side length must be positive, got {s}")
    return HotspotIndex(T, s, build_hot_arrays(T, s))


def query_vertex_aligned(idx: HotspotIndex, i: int, j: int) -> Witness:
    return idx.query_vertex_aligned(i, j)


def query(idx: HotspotIndex, x: float, y: float) -> Witness:
    return idx.query(x, y)


def whole_trajectory_hotspot(idx: HotspotIndex) -> Witness:
    return idx.whole_trajectory_hotspot()


__all__ = [
    "HotspotIndex",
    "QueryTrace",
    "build_index",
    "query",
    "query_vertex_aligned",
    "whole_trajectory_hotspot",
]
