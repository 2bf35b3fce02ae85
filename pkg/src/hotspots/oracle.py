"""Brute-force reference answers used to check the index.

Nothing here touches the sliding queues, the hot arrays or the range-argmax
tables; only the trajectory primitives are shared.  Per-vertex extensions are
found by scanning vertices one at a time and then trying the four squares that
share a corner with the bounding box of the scanned part.  Both window oracles
return lower bounds on the true hotspot weight.
"""
from __future__ import annotations

import numpy as np

from .preprocess import HotEntry
from .trajectory import (
    EPS,
    Square,
    Trajectory,
    Window,
    Witness,
    edge_hotspot,
    inside_intervals,
)


def _corner_extension(box, inside_x, inside_y, outside_x, outside_y, s):
    """Longest fraction of segment inside->outside kept by a square sharing a corner with ``box``."""
    min_x, max_x, min_y, max_y = box
    best_lam, best_sq = 0.0, (min_x, min_y)
    for ax in (min_x, max_x - s):
        for ay in (min_y, max_y - s):
            hi = 1.0
            ok = True
            for p, q, a in ((inside_x, outside_x, ax), (inside_y, outside_y, ay)):
                # the square must hold the scanned part, so its start point too
                if not a - EPS <= p <= a + s + EPS:
                    ok = False
                    break
                d = q - p
                if d != 0:
                    hi = min(hi, max((a - p) / d, (a + s - p) / d))
            if not ok:
                continue
            hi = max(hi, 0.0)
            if hi > best_lam:
                best_lam, best_sq = hi, (ax, ay)
    return best_lam, best_sq


def _extension(T: Trajectory, s: float, v: int, step: int) -> HotEntry:
    times, xs, ys = T.times, T.xs, T.ys
    n = len(T)
    x, y = float(xs[v]), float(ys[v])
    box = (x, x, y, y)
    last = v
    k = v + step
    while 0 <= k < n:
        x, y = float(xs[k]), float(ys[k])
        grown = (min(box[0], x), max(box[1], x), min(box[2], y), max(box[3], y))
        if grown[1] - grown[0] > s + EPS or grown[3] - grown[2] > s + EPS:
            break
        box, last = grown, k
        k += step
    t_last = float(times[last])
    if not 0 <= k < n:
        end = t_last
        sq = (box[0], box[2])
    else:
        lam, sq = _corner_extension(
            box, float(xs[last]), float(ys[last]), float(xs[k]), float(ys[k]), s
        )
        end = t_last + lam * (float(times[k]) - t_last)
    dur = abs(float(times[v]) - end)
    return HotEntry(dur, end, Square(sq[0], sq[1], s))


def oracle_backward_at_vertex(T: Trajectory, s: float, v: int) -> HotEntry:
    """Longest window ending at vertex ``v`` that fits, by direct backward scan."""
    if not 0 <= v < len(T):
        raise IndexError(v)
    return _extension(T, s, v, -1)


def oracle_forward_at_vertex(T: Trajectory, s: float, v: int) -> HotEntry:
    """Longest window starting at vertex ``v`` that fits, by direct forward scan."""
    if not 0 <= v < len(T):
        raise IndexError(v)
    return _extension(T, s, v, +1)


class VertexAnchoredOracle:
    """Best window that starts or ends at a vertex, or lies on one edge.

    The per-vertex scans are done once; each window query then clips them.
    """

    def __init__(self, T: Trajectory, s: float):
        self.T = T
        self.s = s
        self.backward = [oracle_backward_at_vertex(T, s, v) for v in range(len(T))]
        self.forward = [oracle_forward_at_vertex(T, s, v) for v in range(len(T))]
        self._b_end = np.array([e.end for e in self.backward])
        self._f_end = np.array([e.end for e in self.forward])

    def __call__(self, w: Window) -> Witness:
        T, times = self.T, self.T.times
        lo = int(np.searchsorted(times, w.start, side="left"))
        hi = int(np.searchsorted(times, w.end, side="right"))
        ts = times[lo:hi]
        back = ts - np.maximum(self._b_end[lo:hi], w.start)
        fwd = np.minimum(self._f_end[lo:hi], w.end) - ts

        cuts = np.concatenate([[w.start], ts[(ts > w.start) & (ts < w.end)], [w.end]])
        px, py = np.interp(cuts, times, T.xs), np.interp(cuts, times, T.ys)
        dt, dx, dy = np.diff(cuts), np.abs(np.diff(px)), np.abs(np.diff(py))
        with np.errstate(divide="ignore"):
            ratio = np.minimum(1.0, np.minimum(self.s / dx, self.s / dy))
        edge = dt * ratio

        best_score, pick = 0.0, None
        for kind, scores in (("back", back), ("fwd", fwd), ("edge", edge)):
            if len(scores) and scores.max() > best_score:
                best_score, pick = float(scores.max()), (kind, int(np.argmax(scores)))
        if pick is None:
            x0, y0 = T.locate(w.start)
            return Witness(Square(x0, y0, self.s), Window(w.start, w.start), 0.0)
        kind, k = pick
        if kind == "edge":
            return edge_hotspot(T, Window(float(cuts[k]), float(cuts[k + 1])), self.s)
        t = float(ts[k])
        if kind == "back":
            e = self.backward[lo + k]
            return Witness.of_interval(e.square, max(e.end, w.start), t)
        e = self.forward[lo + k]
        return Witness.of_interval(e.square, t, min(e.end, w.end))


def oracle_vertex_anchored_opt(T: Trajectory, s: float, w: Window) -> Witness:
    return VertexAnchoredOracle(T, s)(w)


def van_der_corput(k: int) -> np.ndarray:
    """First ``k`` points of the base-2 radical-inverse sequence; prefixes are nested."""
    out = np.zeros(k)
    for m in range(k):
        f, denom, q = 0.0, 1.0, m
        while q:
            denom *= 2.0
            f += (q & 1) / denom
            q >>= 1
        out[m] = f
    return out


def forward_reach(T: Trajectory, s: float, starts) -> np.ndarray:
    """For each start time, the latest end time such that the window fits.

    Vectorized over starts: every start carries its own bounding box and walks
    forward one vertex per round until the next vertex would break the fit,
    then stops part-way along that edge.
    """
    times, xs, ys = T.times, T.xs, T.ys
    n = len(T)
    starts = np.asarray(starts, dtype=np.float64)
    reach = np.empty_like(starts)
    nxt = np.searchsorted(times, starts, side="right")
    prev = np.maximum(nxt - 1, 0)
    safe = np.minimum(nxt, n - 1)
    span = times[safe] - times[prev]
    frac = np.where(span > 0, (starts - times[prev]) / np.where(span > 0, span, 1.0), 0.0)
    px = xs[prev] + frac * (xs[safe] - xs[prev])
    py = ys[prev] + frac * (ys[safe] - ys[prev])
    pt = starts.copy()
    min_x, max_x, min_y, max_y = px.copy(), px.copy(), py.copy(), py.copy()
    active = np.arange(len(starts))
    while len(active):
        at_end = nxt[active] >= n
        if at_end.any():
            reach[active[at_end]] = times[-1]
            active = active[~at_end]
            if not len(active):
                break
        k = nxt[active]
        vx, vy = xs[k], ys[k]
        gx0 = np.minimum(min_x[active], vx)
        gx1 = np.maximum(max_x[active], vx)
        gy0 = np.minimum(min_y[active], vy)
        gy1 = np.maximum(max_y[active], vy)
        ok = (gx1 - gx0 <= s + EPS) & (gy1 - gy0 <= s + EPS)

        stop = active[~ok]
        if len(stop):
            ks = nxt[stop]
            lam = np.ones(len(stop))
            for p, q, lo_b, hi_b in (
                (px[stop], xs[ks], max_x[stop] - s, min_x[stop] + s),
                (py[stop], ys[ks], max_y[stop] - s, min_y[stop] + s),
            ):
                d = q - p
                with np.errstate(divide="ignore", invalid="ignore"):
                    lim = np.where(d > 0, (hi_b - p) / d, np.where(d < 0, (lo_b - p) / d, np.inf))
                lam = np.minimum(lam, lim)
            lam = np.clip(lam, 0.0, 1.0)
            reach[stop] = pt[stop] + lam * (times[ks] - pt[stop])

        go = active[ok]
        kg = nxt[go]
        min_x[go], max_x[go] = gx0[ok], gx1[ok]
        min_y[go], max_y[go] = gy0[ok], gy1[ok]
        px[go], py[go], pt[go] = xs[kg], ys[kg], times[kg]
        nxt[go] = kg + 1
        active = go
    return reach


class SampledOracle:
    """Dense-start oracle: ``k`` start times per edge plus every vertex time."""

    def __init__(self, T: Trajectory, s: float, k: int):
        if k < 1:
            raise ValueError("need at least one sample per edge")
        self.T, self.s, self.k = T, s, k
        times = T.times
        fr = van_der_corput(k)
        if len(T) > 1:
            t0, t1 = times[:-1, None], times[1:, None]
            grid = (t0 + fr[None, :] * (t1 - t0)).ravel()
            starts = np.unique(np.concatenate([grid, times]))
        else:
            starts = times.copy()
        self.starts = starts
        self.reach = forward_reach(T, s, starts)

    def __call__(self, w: Window) -> float:
        lo = np.searchsorted(self.starts, w.start, side="left")
        hi = np.searchsorted(self.starts, w.end, side="right")
        best = 0.0
        if hi > lo:
            st = self.starts[lo:hi]
            best = float(np.max(np.minimum(self.reach[lo:hi], w.end) - st))
        first = float(forward_reach(self.T, self.s, [w.start])[0])
        return max(best, min(first, w.end) - w.start)


def oracle_sampled_opt(T: Trajectory, s: float, w: Window, k: int) -> float:
    return SampledOracle(T, s, k)(w)


def verify_witness(T: Trajectory, w: Window, wit: Witness, eps: float = EPS) -> bool:
    iv = wit.interval
    if not w.contains(iv, eps):
        return False
    if wit.score < 0 or abs(wit.score - iv.duration) > eps:
        return False
    if iv.start < T.times[0] or iv.end > T.times[-1]:
        return False
    if wit.square.side <= 0:
        return False
    runs = inside_intervals(T, iv, wit.square, eps)
    return any(a <= iv.start + eps and b >= iv.end - eps for a, b in runs)
