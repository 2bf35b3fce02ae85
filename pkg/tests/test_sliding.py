import random

import numpy as np
import pytest

from hotspots.sliding import EmptyQueueError, SlidingExtremaQueue, window_extrema


def random_workload(q, seed, ops=10_000):
    """Drive ``q`` and a plain list side by side; yield both after every op."""
    rng = random.Random(seed)
    ref = []
    tag = 0
    for _ in range(ops):
        if ref and rng.random() < 0.45:
            assert q.pop_oldest() == ref.pop(0)
        else:
            value = rng.choice([rng.uniform(-100, 100), float(rng.randint(-3, 3))])
            q.push(tag, value)
            ref.append((tag, value))
            tag += 1
        yield ref


class TestQueue:
    def test_example(self):
        q = SlidingExtremaQueue()
        for tag, v in enumerate([3.0, 1.0, 4.0, 1.0, 5.0]):
            q.push(tag, v)
        assert (q.min(), q.max()) == (1.0, 5.0)
        q.pop_oldest()
        q.pop_oldest()
        assert (q.min(), q.max()) == (1.0, 5.0)
        q.pop_oldest()
        q.pop_oldest()
        assert (q.min(), q.max(), q.extent()) == (5.0, 5.0, 0.0)

    def test_pop_then_extrema(self):
        q = SlidingExtremaQueue()
        for tag, v in enumerate([3.0, 1.0, 2.0]):
            q.push(tag, v)
        assert q.pop_oldest() == (0, 3.0)
        assert (q.min(), q.max()) == (1.0, 2.0)

    def test_hundred(self):
        q = SlidingExtremaQueue()
        for v in range(1, 101):
            q.push(v, float(v))
        for _ in range(50):
            q.pop_oldest()
        assert q.min() == 51.0

    def test_oldest(self):
        q = SlidingExtremaQueue()
        q.push(0, 9.0)
        q.push(1, 8.0)
        assert q.oldest() == (0, 9.0)

    def test_empty(self):
        q = SlidingExtremaQueue()
        assert not q
        for op in (q.pop_oldest, q.min, q.max, q.oldest, q.extent):
            with pytest.raises(EmptyQueueError):
                op()

    def test_tags_must_increase(self):
        q = SlidingExtremaQueue()
        q.push(4, 1.0)
        with pytest.raises(ValueError):
            q.push(4, 2.0)

    def test_duplicates_survive_partial_pops(self):
        q = SlidingExtremaQueue()
        for tag in range(3):
            q.push(tag, 2.0)
        q.pop_oldest()
        assert q.min() == q.max() == 2.0
        assert len(q) == 2

    @pytest.mark.parametrize("seed", range(3))
    def test_matches_naive_rescan(self, seed):
        q = SlidingExtremaQueue()
        for ref in random_workload(q, seed):
            assert len(q) == len(ref)
            if ref:
                values = [v for _, v in ref]
                assert q.min() == min(values)
                assert q.max() == max(values)
                assert q.oldest() == ref[0]

    def test_moves_linear_in_pushes(self):
        q = SlidingExtremaQueue()
        for _ in random_workload(q, 7):
            pass
        assert q.pops <= q.pushes
        assert q.moves <= 6 * q.pushes


class TestWindowExtrema:
    def naive(self, xs, ys, limit):
        starts = []
        u = 0
        for v in range(len(xs)):
            while (np.ptp(xs[u:v + 1]) > limit) or (np.ptp(ys[u:v + 1]) > limit):
                u += 1
            starts.append(u)
        return np.array(starts)

    @pytest.mark.parametrize("seed", range(5))
    def test_starts_match_naive(self, seed):
        rng = np.random.default_rng(seed)
        xs = np.cumsum(rng.normal(size=300))
        ys = np.cumsum(rng.normal(size=300))
        scan = window_extrema(xs, ys, 2.5, use_jit=False)
        assert np.array_equal(scan.starts, self.naive(xs, ys, 2.5))
        for v in range(0, 300, 17):
            u = scan.starts[v]
            assert scan.min_x[v] == xs[u:v + 1].min()
            assert scan.max_y[v] == ys[u:v + 1].max()

    @pytest.mark.parametrize("seed", range(3))
    def test_jit_matches_python(self, seed):
        rng = np.random.default_rng(seed)
        xs = np.round(np.cumsum(rng.normal(size=2000)), 1)
        ys = np.round(np.cumsum(rng.normal(size=2000)), 1)
        a = window_extrema(xs, ys, 3.0, use_jit=False)
        b = window_extrema(xs, ys, 3.0, use_jit=True)
        for name in ("starts", "min_x", "max_x", "min_y", "max_y"):
            assert np.array_equal(getattr(a, name), getattr(b, name))
        assert a.pushes == b.pushes and a.pops == b.pops

    def test_counters(self):
        rng = np.random.default_rng(1)
        xs, ys = rng.uniform(0, 10, 500), rng.uniform(0, 10, 500)
        scan = window_extrema(xs, ys, 4.0)
        for c in ("x", "y"):
            assert scan.pushes[c] == 500
            assert scan.pops[c] <= scan.pushes[c]
            assert scan.moves[c] <= 6 * scan.pushes[c]
