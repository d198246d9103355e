from .parallel import ordered_map
from .text import (
    BALL_DOT,
    CROSSING_DOT,
    DotRenderer,
    Renderers,
    ReportRenderer,
    SummaryRenderer,
    render,
)
from .unionfind import UnionFind


__all__ = [
    "BALL_DOT",
    "CROSSING_DOT",
    "DotRenderer",
    "Renderers",
    "ReportRenderer",
    "SummaryRenderer",
    "UnionFind",
    "ordered_map",
    "render",
]
