"""Constant-time range-argmax over a fixed sequence.

Blocks of ``BLOCK`` values carry in-block prefix/suffix argmax arrays, and a
sparse table over the block maxima answers the middle part of a query.  Space
is ``O(n + (n / BLOCK) log n)``.
"""
from __future__ import annotations

import numpy as np

BLOCK = 8


def _prefix_argmax(rows: np.ndarray) -> np.ndarray:
    """Row-wise argmax of ``rows[:, :k+1]`` for every k; ties go to the earlier column."""
    width = rows.shape[1]
    run = np.maximum.accumulate(rows, axis=1)
    cols = np.broadcast_to(np.arange(width), rows.shape)
    new_max = np.ones(rows.shape, dtype=bool)
    new_max[:, 1:] = rows[:, 1:] > run[:, :-1]
    return np.maximum.accumulate(np.where(new_max, cols, 0), axis=1)


def _suffix_argmax(rows: np.ndarray) -> np.ndarray:
    """Row-wise argmax of ``rows[:, k:]`` for every k; ties go to the earlier column."""
    width = rows.shape[1]
    rev = rows[:, ::-1]
    run = np.maximum.accumulate(rev, axis=1)
    cols = np.broadcast_to(np.arange(width), rows.shape)
    at_least = np.ones(rows.shape, dtype=bool)
    at_least[:, 1:] = rev[:, 1:] >= run[:, :-1]
    last = np.maximum.accumulate(np.where(at_least, cols, 0), axis=1)
    return (width - 1 - last)[:, ::-1]


class RangeArgmax:
    """Index of the maximum of ``values[i..j]`` (inclusive), smallest index on ties."""

    def __init__(self, values):
        values = np.array(values, dtype=np.float64)
        if values.ndim != 1 or len(values) == 0:
            raise ValueError("range argmax needs a non-empty 1-d sequence")
        n = len(values)
        nb = -(-n // BLOCK)
        padded = np.full(nb * BLOCK, -np.inf)
        padded[:n] = values
        rows = padded.reshape(nb, BLOCK)
        base = (np.arange(nb) * BLOCK)[:, None]
        self._prefix = (_prefix_argmax(rows) + base).ravel()[:n]
        self._suffix = (_suffix_argmax(rows) + base).ravel()[:n]

        level = self._prefix[np.minimum(np.arange(nb) * BLOCK + BLOCK - 1, n - 1)]
        table = [level]
        width = 1
        while 2 * width <= nb:
            a, b = level[: nb - 2 * width + 1], level[width : nb - width + 1]
            level = np.where(values[b] > values[a], b, a)
            table.append(level)
            width *= 2
        self._table = table
        self.values = values
        self.values.setflags(write=False)

    def __len__(self) -> int:
        return len(self.values)

    def _blocks(self, lo: int, hi: int) -> int:
        """Argmax over whole blocks ``lo..hi`` (inclusive)."""
        k = (hi - lo + 1).bit_length() - 1
        row = self._table[k]
        a, b = int(row[lo]), int(row[hi - (1 << k) + 1])
        return b if self.values[b] > self.values[a] else a

    def query(self, i: int, j: int) -> int:
        i, j = int(i), int(j)
        if not 0 <= i <= j < len(self.values):
            raise IndexError(f"invalid range [{i}, {j}] for length {len(self.values)}")
        bi, bj = i // BLOCK, j // BLOCK
        v = self.values
        if bi == bj:
            return i + int(np.argmax(v[i : j + 1]))
        best = int(self._suffix[i])
        if bj > bi + 1:
            mid = self._blocks(bi + 1, bj - 1)
            if v[mid] > v[best]:
                best = mid
        right = int(self._prefix[j])
        if v[right] > v[best]:
            best = right
        return best

    __call__ = query


def build_range_argmax(values) -> RangeArgmax:
    return RangeArgmax(values)
