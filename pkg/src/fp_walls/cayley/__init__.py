from .ball import Ball, Path, PathEdge, ball, naive_ball_size
from .components import (
    EdgeStatus,
    EdgeVerdict,
    Separation,
    components_minus_Ei,
    coverage_minus_Ei,
    edge_in_Ei,
    split_minus_Ei,
    translate_disjointness,
)
from .export import ball_dot
from .fixtures import FixturePath, fixture_paths, validate_fixture


__all__ = [
    "Ball",
    "EdgeStatus",
    "EdgeVerdict",
    "FixturePath",
    "Path",
    "PathEdge",
    "Separation",
    "ball",
    "ball_dot",
    "components_minus_Ei",
    "coverage_minus_Ei",
    "edge_in_Ei",
    "fixture_paths",
    "naive_ball_size",
    "split_minus_Ei",
    "translate_disjointness",
    "validate_fixture",
]
