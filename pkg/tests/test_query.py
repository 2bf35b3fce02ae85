import math

import numpy as np
import pytest

from conftest import random_case
from hotspots.bench import random_windows
from hotspots.oracle import VertexAnchoredOracle, verify_witness
from hotspots.query import QueryTrace, build_index, query, query_vertex_aligned, whole_trajectory_hotspot
from hotspots.trajectory import PreconditionError, Trajectory, Window, weight_of_square


@pytest.fixture
def idx4(t4):
    return build_index(t4, 2)


class TestExamples:
    def test_aligned_full(self, idx4):
        wit = query_vertex_aligned(idx4, 0, 3)
        assert wit.score == pytest.approx(2)
        assert wit.interval == Window(1, 3)
        assert (wit.square.anchor_x, wit.square.anchor_y) == pytest.approx((1, 0))

    def test_aligned_full_trace(self, idx4):
        trace = QueryTrace()
        idx4.query_vertex_aligned(0, 3, trace)
        assert trace.cases == ["c-left", "edge"]

    def test_aligned_right(self, idx4):
        wit = query_vertex_aligned(idx4, 1, 3)
        assert wit.score == pytest.approx(2)
        assert wit.interval == Window(1, 3)

    def test_aligned_edge(self, idx4):
        wit = query_vertex_aligned(idx4, 0, 1)
        assert wit.score == pytest.approx(1)
        assert wit.interval == Window(0, 1)

    def test_aligned_point(self, idx4):
        assert query_vertex_aligned(idx4, 2, 2).score == 0

    @pytest.mark.parametrize("bad", [(2, 1), (-1, 2), (0, 4)])
    def test_aligned_bad_indices(self, idx4, bad):
        with pytest.raises(IndexError):
            query_vertex_aligned(idx4, *bad)

    def test_general_overhang(self, idx4):
        assert query(idx4, 0.5, 3).score == pytest.approx(2)

    def test_general_single_edge(self, idx4):
        assert query(idx4, 1.2, 1.8).score == pytest.approx(0.6)

    def test_general_forward_at_start(self, idx4):
        wit = query(idx4, 0, 1.5)
        assert wit.score == pytest.approx(1.5)
        assert wit.interval.start == 0 and wit.interval.end == pytest.approx(1.5)

    def test_window_clamped(self, idx4):
        assert query(idx4, -5, 10).score == pytest.approx(2)
        assert query(idx4, 7, 9).score == 0

    def test_reversed_window_rejected(self, idx4):
        with pytest.raises(PreconditionError):
            query(idx4, 2, 1)

    def test_whole(self, idx4):
        assert whole_trajectory_hotspot(idx4).score == pytest.approx(2)

    def test_whole_single_edge(self):
        T = Trajectory.from_vertices([(0, 0, 0), (10, 10, 0)])
        assert whole_trajectory_hotspot(build_index(T, 4)).score == pytest.approx(4)

    def test_whole_stationary(self):
        T = Trajectory.from_vertices([(0, 5, 5), (3, 5, 5), (7, 5, 5)])
        assert whole_trajectory_hotspot(build_index(T, 1)).score == pytest.approx(7)

    def test_single_vertex(self):
        idx = build_index(Trajectory.from_vertices([(1, 2, 3)]), 1)
        assert len(idx) == 1
        assert idx.arrays.back_dur.tolist() == [0]
        assert whole_trajectory_hotspot(idx).score == 0

    @pytest.mark.parametrize("side", [0, -1, float("nan")])
    def test_bad_side(self, t4, side):
        with pytest.raises(PreconditionError):
            build_index(t4, side)

    def test_index_arrays_match_table(self, idx4):
        assert idx4.arrays.back_dur.tolist() == pytest.approx([0, 1, 1, 2])
        assert idx4.arrays.fwd_dur.tolist() == pytest.approx([1.5, 2, 1, 0])


class TestProperties:
    @pytest.mark.parametrize("seed", range(30))
    def test_certified_and_half(self, seed):
        T, s = random_case(seed)
        idx = build_index(T, s)
        oracle = VertexAnchoredOracle(T, s)
        for x, y in random_windows(T, 15, seed):
            w = Window(x, y)
            wit = idx.query(x, y)
            assert verify_witness(T, w, wit)
            assert weight_of_square(T, w, wit.square) >= wit.score - 1e-9
            assert wit.score <= w.duration + 1e-9
            assert wit.score >= oracle(w).score / 2 - 1e-9

    @pytest.mark.parametrize("seed", range(30))
    def test_depth_bound(self, seed):
        T, s = random_case(seed)
        idx = build_index(T, s)
        rng = np.random.default_rng(seed)
        for _ in range(40):
            i, j = sorted(rng.integers(0, len(T), 2))
            trace = QueryTrace()
            idx.query_vertex_aligned(int(i), int(j), trace)
            m = j - i + 1
            assert trace.depth <= math.ceil(math.log2(m)) + 1

    def test_depth_bound_exhaustive_small(self):
        T, s = random_case(5, n_max=40)
        idx = build_index(T, s)
        for i in range(len(T)):
            for j in range(i, len(T)):
                trace = QueryTrace()
                idx.query_vertex_aligned(i, j, trace)
                assert trace.depth <= math.ceil(math.log2(j - i + 1)) + 1

    @pytest.mark.parametrize("seed", range(10))
    def test_enlargement_keeps_half(self, seed):
        T, s = random_case(seed)
        idx = build_index(T, s)
        oracle = VertexAnchoredOracle(T, s)
        rng = np.random.default_rng(seed)
        for x, y in random_windows(T, 10, seed):
            small = Window(x, y)
            big = Window(max(T.start, x - rng.uniform(0, 5)), min(T.end, y + rng.uniform(0, 5)))
            assert oracle(big).score >= oracle(small).score - 1e-9
            assert idx.query(big.start, big.end).score >= oracle(small).score / 2 - 1e-9

    @pytest.mark.parametrize("seed", range(10))
    def test_reversal_symmetric_bound(self, seed):
        # the reversed trajectory has the same optimum on the mirrored window
        T, s = random_case(seed)
        R = T.reversed()
        a, b = build_index(T, s), build_index(R, s)
        oracle = VertexAnchoredOracle(T, s)
        for x, y in random_windows(T, 10, seed):
            opt = oracle(Window(x, y)).score
            assert b.query(-y, -x).score >= opt / 2 - 1e-9
            assert a.query(x, y).score >= opt / 2 - 1e-9

    def test_concurrent_queries_match(self):
        from concurrent.futures import ThreadPoolExecutor

        T, s = random_case(2)
        idx = build_index(T, s)
        windows = random_windows(T, 200, 2)
        serial = [idx.query(*w) for w in windows]
        with ThreadPoolExecutor(4) as pool:
            assert list(pool.map(lambda w: idx.query(*w), windows)) == serial
