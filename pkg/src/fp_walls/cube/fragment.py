"""Orientation vectors of a ball over a finite wall list."""
import logging
from dataclasses import dataclass
from typing import Optional

from fp_walls.cayley import Ball, PathEdge
from fp_walls.cube.crossing import CrossingGraph, SideTable, crossing_graph
from fp_walls.subgroup import MembershipOracle
from fp_walls.types import Confidence, CubeFragmentRecord, SearchBudget, VertexRecord, weakest
from fp_walls.utils import CROSSING_DOT, DotRenderer
from fp_walls.walls import WallRegistry, keys_of_edge

logger = logging.getLogger(__name__)


@dataclass
class CubeFragment:
    registry: WallRegistry
    table: SideTable
    crossing: CrossingGraph
    bit_violations: list[str]

    def hamming(self, a: int, b: int) -> int:
        """Number of resolved walls whose bits differ between vertices a and b."""
        return len(_differing(self.table, a, b))

    def record(self) -> CubeFragmentRecord:
        vertices = []
        for k, g in enumerate(self.table.ball.order):
            bits, marks = self.table.bits(k)
            vertices.append(
                VertexRecord(
                    element=g.format(),
                    bits=bits,
                    unresolved=marks,
                    confidence=Confidence.UNRESOLVED if "1" in marks else weakest(*self.table.confidence),
                )
            )
        return CubeFragmentRecord(
            radius=self.table.ball.radius,
            walls=self.registry.labels(),
            vertices=vertices,
            crossing=self.crossing.report,
            bit_violations=len(self.bit_violations),
        )

    def dot(self) -> str:
        return DotRenderer.render(
            CROSSING_DOT, {"walls": self.registry.labels(), "pairs": self.crossing.report.crossing_pairs}
        )


def _differing(table: SideTable, a: int, b: int) -> set[int]:
    return {
        w
        for w in range(len(table.walls))
        if (table.block[w] >> a & 1 and table.co[w] >> b & 1) or (table.co[w] >> a & 1 and table.block[w] >> b & 1)
    }


def orientation_vectors(
    oracle: MembershipOracle,
    b: Ball,
    registry: WallRegistry,
    budget: Optional[SearchBudget] = None,
) -> CubeFragment:
    """Side bits of every ball vertex, the crossing graph, and the edge bit check.

    Across each edge of the ball the resolved bits that change must be
    exactly those of the listed walls the edge crosses.
    """
    table = SideTable.build(oracle, registry.keys, b, budget)
    position = {g: k for k, g in enumerate(b.order)}
    violations: list[str] = []
    for u, letter, v in b.edges():
        crossed = {registry.lookup(key) for key in keys_of_edge(PathEdge(0, u, letter, v))} - {None}
        changed = _differing(table, position[u], position[v])
        ends = (1 << position[u]) | (1 << position[v])
        unresolved = {w for w in crossed if table.unresolved(w) & ends}
        if changed != crossed - unresolved:
            violations.append(f"{u} -{letter}-> {v}")
    if violations:
        logger.warning("%d ball edges change unexpected wall bits", len(violations))
    return CubeFragment(registry, table, crossing_graph(table, oracle.ctx.n), violations)
