"""Approximate time-windowed contiguous hotspot queries on polygonal trajectories."""
from .generate import WalkParams, generate
from .io import format_trajectory, parse_trajectory
from .oracle import (
    SampledOracle,
    VertexAnchoredOracle,
    oracle_backward_at_vertex,
    oracle_forward_at_vertex,
    oracle_sampled_opt,
    oracle_vertex_anchored_opt,
    verify_witness,
)
from .preprocess import HotArrays, HotEntry, build_hot_arrays, extend_back, hot_range
from .query import HotspotIndex, QueryTrace, build_index, query, query_vertex_aligned, whole_trajectory_hotspot
from .rmq import RangeArgmax, build_range_argmax
from .sliding import SlidingExtremaQueue, window_extrema
from .trajectory import (
    EPS,
    BBox,
    Square,
    Trajectory,
    Vertex,
    Window,
    Witness,
    covering_square,
    edge_hotspot,
    fits,
    locate,
    subtrajectory_bbox,
    weight_of_square,
)

__version__ = "0.1.0"
