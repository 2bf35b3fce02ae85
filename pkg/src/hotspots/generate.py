"""Seeded synthetic trajectories: a random-waypoint walk with dwell spells."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .trajectory import Trajectory


@dataclass(frozen=True)
class WalkParams:
    extent: float = 100.0        # walk stays in [0, extent]^2
    step: float = 1.0            # mean distance per step while travelling
    dwell_fraction: float = 0.2  # probability that a leg is a dwell spell
    dwell_steps: float = 20.0    # mean number of vertices in a dwell spell
    dwell_jitter: float = 0.25   # dwell vertices stay within this offset of the spot


def generate(n: int, seed: int, params: WalkParams | None = None) -> Trajectory:
    """Random-waypoint walk of exactly ``n`` vertices with unit-mean time steps."""
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    p = params or WalkParams()
    if not 0.0 <= p.dwell_fraction <= 1.0:
        raise ValueError("dwell_fraction must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    origin = rng.uniform(0.0, p.extent, size=2)

    xs_parts, ys_parts = [np.array([origin[0]])], [np.array([origin[1]])]
    have = 1
    here = origin
    while have < n:
        legs = max(16, int((n - have) / 10))
        dwell = rng.random(legs) < p.dwell_fraction
        waypoints = rng.uniform(0.0, p.extent, size=(legs, 2))
        # leg l ends at the most recent travel waypoint (dwell legs stay put)
        last_move = np.maximum.accumulate(np.where(~dwell, np.arange(legs), -1))
        ends = np.where((last_move >= 0)[:, None], waypoints[np.maximum(last_move, 0)], here)
        starts = np.vstack([here[None, :], ends[:-1]])
        dist = np.hypot(*(ends - starts).T)
        counts = np.where(
            dwell,
            1 + rng.geometric(1.0 / max(p.dwell_steps, 1.0), size=legs),
            np.maximum(1, np.ceil(dist / p.step)).astype(np.int64),
        )
        leg = np.repeat(np.arange(legs), counts)
        offsets = np.concatenate([[0], np.cumsum(counts)[:-1]])
        j = np.arange(len(leg)) - offsets[leg] + 1
        frac = (j / counts[leg])[:, None]
        pos = starts[leg] + frac * (ends[leg] - starts[leg])
        jitter = rng.uniform(-p.dwell_jitter, p.dwell_jitter, size=pos.shape)
        pos = np.where(dwell[leg][:, None], starts[leg] + jitter, pos)
        xs_parts.append(pos[:, 0])
        ys_parts.append(pos[:, 1])
        have += len(pos)
        here = ends[-1]
    xs = np.concatenate(xs_parts)[:n]
    ys = np.concatenate(ys_parts)[:n]
    dt = rng.uniform(0.5, 1.5, size=n - 1)
    times = np.concatenate([[0.0], np.cumsum(dt)])
    return Trajectory(times, xs, ys)
