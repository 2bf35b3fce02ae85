"""Timing harness: build time, query latency percentiles, recursion depths."""
from __future__ import annotations

import random
import statistics
import time
from collections import Counter
from dataclasses import asdict, dataclass

import numpy as np

from .generate import WalkParams, generate
from .query import HotspotIndex, QueryTrace, build_index


@dataclass
class BenchReport:
    n: int
    queries: int
    side: float
    seed: int
    generate_s: float
    build_s: float
    whole_s: float
    query_median_us: float
    query_p99_us: float
    query_max_us: float
    depth_histogram: dict

    def as_dict(self) -> dict:
        return asdict(self)


def random_windows(T, count: int, seed: int) -> list[tuple[float, float]]:
    rng = random.Random(seed)
    lo, hi = T.start, T.end
    out = []
    for _ in range(count):
        a, b = rng.uniform(lo, hi), rng.uniform(lo, hi)
        out.append((min(a, b), max(a, b)))
    return out


def time_queries(idx: HotspotIndex, windows) -> tuple[list[float], Counter]:
    """Per-query wall time in seconds, and how often each recursion depth occurred."""
    lat = []
    depths: Counter = Counter()
    clock = time.perf_counter
    for x, y in windows:
        trace = QueryTrace()
        t0 = clock()
        idx.query(x, y, trace)
        lat.append(clock() - t0)
        depths[trace.depth] += 1
    return lat, depths


def warm_up() -> None:
    """Compile the scan kernel so it is not charged to the first build."""
    build_index(generate(64, 0), 1.0)


def run_benchmark(n: int, queries: int, side: float, seed: int, params: WalkParams | None = None) -> BenchReport:
    warm_up()
    t0 = time.perf_counter()
    T = generate(n, seed, params)
    t1 = time.perf_counter()
    idx = build_index(T, side)
    t2 = time.perf_counter()
    idx.whole_trajectory_hotspot()
    t3 = time.perf_counter()
    lat, depths = time_queries(idx, random_windows(T, queries, seed + 1))
    lat_us = np.array(lat) * 1e6
    return BenchReport(
        n=n, queries=queries, side=side, seed=seed,
        generate_s=t1 - t0, build_s=t2 - t1, whole_s=t3 - t2,
        query_median_us=float(statistics.median(lat_us)) if len(lat_us) else 0.0,
        query_p99_us=float(np.percentile(lat_us, 99)) if len(lat_us) else 0.0,
        query_max_us=float(lat_us.max()) if len(lat_us) else 0.0,
        depth_histogram={int(k): v for k, v in sorted(depths.items())},
    )
