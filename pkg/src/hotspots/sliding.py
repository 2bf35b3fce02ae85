"""FIFO queue reporting the minimum and maximum of its current contents."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np


class EmptyQueueError(IndexError):
    pass


class SlidingExtremaQueue:
    """Sliding-window min/max queue with amortized O(1) operations.

    Items are ``(tag, value)`` pairs with strictly increasing tags.  Besides the
    FIFO itself two monotonic deques hold the candidates for the minimum and the
    maximum; every item enters and leaves each deque at most once.

    ``pushes``, ``pops`` and ``moves`` count operations so callers can check the
    linear-work bound: ``moves`` counts every append/pop on any internal deque.
    """

    __slots__ = ("_items", "_mins", "_maxs", "pushes", "pops", "moves")

    def __init__(self):
        self._items: deque[tuple[int, float]] = deque()
        self._mins: deque[tuple[int, float]] = deque()
        self._maxs: deque[tuple[int, float]] = deque()
        self.pushes = 0
        self.pops = 0
        self.moves = 0

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def push(self, tag: int, value: float) -> None:
        if self._items and tag <= self._items[-1][0]:
            raise ValueError(f"tag {tag} not greater than last tag {self._items[-1][0]}")
        item = (tag, value)
        mins, maxs = self._mins, self._maxs
        moves = 3
        while mins and mins[-1][1] > value:
            mins.pop()
            moves += 1
        while maxs and maxs[-1][1] < value:
            maxs.pop()
            moves += 1
        mins.append(item)
        maxs.append(item)
        self._items.append(item)
        self.pushes += 1
        self.moves += moves

    def pop_oldest(self) -> tuple[int, float]:
        if not self._items:
            raise EmptyQueueError("pop from an empty queue")
        item = self._items.popleft()
        moves = 1
        if self._mins[0][0] == item[0]:
            self._mins.popleft()
            moves += 1
        if self._maxs[0][0] == item[0]:
            self._maxs.popleft()
            moves += 1
        self.pops += 1
        self.moves += moves
        return item

    def oldest(self) -> tuple[int, float]:
        if not self._items:
            raise EmptyQueueError("empty queue")
        return self._items[0]

    def min(self) -> float:
        if not self._mins:
            raise EmptyQueueError("min of an empty queue")
        return self._mins[0][1]

    def max(self) -> float:
        if not self._maxs:
            raise EmptyQueueError("max of an empty queue")
        return self._maxs[0][1]

    def extent(self) -> float:
        """``max() - min()``; the build loop calls this once per pop."""
        if not self._items:
            raise EmptyQueueError("extent of an empty queue")
        return self._maxs[0][1] - self._mins[0][1]


@dataclass
class WindowScan:
    """Result of :func:`window_extrema`: per-vertex window start and extrema.

    ``pushes``/``pops``/``moves`` are keyed by coordinate (``"x"``, ``"y"``).
    """

    starts: np.ndarray
    min_x: np.ndarray
    max_x: np.ndarray
    min_y: np.ndarray
    max_y: np.ndarray
    pushes: dict = field(default_factory=dict)
    pops: dict = field(default_factory=dict)
    moves: dict = field(default_factory=dict)


def _scan_python(xs, ys, limit):
    n = len(xs)
    qx, qy = SlidingExtremaQueue(), SlidingExtremaQueue()
    starts = np.empty(n, dtype=np.int64)
    ext = np.empty((4, n))
    xs_l, ys_l = xs.tolist(), ys.tolist()
    for v in range(n):
        qx.push(v, xs_l[v])
        qy.push(v, ys_l[v])
        while qx.extent() > limit or qy.extent() > limit:
            qx.pop_oldest()
            qy.pop_oldest()
        starts[v] = qx.oldest()[0]
        ext[0, v], ext[1, v], ext[2, v], ext[3, v] = qx.min(), qx.max(), qy.min(), qy.max()
    counts = {name: (q.pushes, q.pops, q.moves) for name, q in (("x", qx), ("y", qy))}
    return starts, ext, counts


def _scan_kernel(xs, ys, limit):
    """Same scan with four array-backed monotonic deques of vertex indices."""
    n = len(xs)
    starts = np.empty(n, dtype=np.int64)
    ext = np.empty((4, n))
    dq = np.empty((4, n), dtype=np.int64)  # min x, max x, min y, max y
    head = np.zeros(4, dtype=np.int64)
    tail = np.zeros(4, dtype=np.int64)
    moves = np.zeros(2, dtype=np.int64)
    start = 0
    pops = 0
    for v in range(n):
        for q in range(4):
            vals = xs if q < 2 else ys
            val = vals[v]
            c = q // 2
            while tail[q] > head[q]:
                last = vals[dq[q, tail[q] - 1]]
                if (q % 2 == 0 and last > val) or (q % 2 == 1 and last < val):
                    tail[q] -= 1
                    moves[c] += 1
                else:
                    break
            dq[q, tail[q]] = v
            tail[q] += 1
        moves += 3
        while (xs[dq[1, head[1]]] - xs[dq[0, head[0]]] > limit
               or ys[dq[3, head[3]]] - ys[dq[2, head[2]]] > limit):
            for q in range(4):
                if dq[q, head[q]] == start:
                    head[q] += 1
                    moves[q // 2] += 1
            start += 1
            pops += 1
            moves += 1
        starts[v] = start
        ext[0, v] = xs[dq[0, head[0]]]
        ext[1, v] = xs[dq[1, head[1]]]
        ext[2, v] = ys[dq[2, head[2]]]
        ext[3, v] = ys[dq[3, head[3]]]
    return starts, ext, pops, moves


try:
    from numba import njit
except ImportError:  # pragma: no cover
    _jit_kernel = None
else:
    _jit_kernel = njit(cache=True)(_scan_kernel)


def window_extrema(xs, ys, limit: float, use_jit: bool | None = None) -> WindowScan:
    """For every vertex v, the earliest u such that vertices u..v have x- and
    y-extent at most ``limit``, with the extrema of that window.

    The start index never decreases, so every vertex is pushed and popped at
    most once per queue.  ``use_jit=None`` uses the compiled kernel when numba
    is importable; ``False`` forces the :class:`SlidingExtremaQueue` loop.
    """
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    ys = np.ascontiguousarray(ys, dtype=np.float64)
    if use_jit is None:
        use_jit = _jit_kernel is not None
    n = len(xs)
    if use_jit:
        if _jit_kernel is None:
            raise RuntimeError("numba is not available")
        starts, ext, pops, moves = _jit_kernel(xs, ys, float(limit))
        pops = int(pops)
        counts = {"x": (n, pops, int(moves[0])), "y": (n, pops, int(moves[1]))}
    else:
        starts, ext, counts = _scan_python(xs, ys, limit)
    return WindowScan(
        starts, ext[0], ext[1], ext[2], ext[3],
        pushes={k: c[0] for k, c in counts.items()},
        pops={k: c[1] for k, c in counts.items()},
        moves={k: c[2] for k, c in counts.items()},
    )
