"""Pairwise crossing of walls over a finite search ball and the crossing graph."""
import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence, Union

import networkx as nx

from fp_walls.cayley import Ball, PathEdge
from fp_walls.core import Element
from fp_walls.errors import UnresolvedEdge
from fp_walls.subgroup import MembershipOracle
from fp_walls.types import (
    CliqueRecord,
    Confidence,
    CrossingGraphReport,
    CrossingPairRecord,
    SearchBudget,
    weakest,
)
from fp_walls.walls import (
    HorizontalKey,
    Side,
    VerticalKey,
    VertizontalKey,
    WallKey,
    WallRegistry,
    keys_of_edge,
    side,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Crossing:
    witnesses: tuple[Element, Element, Element, Element]

    verdict = "crossing"


@dataclass(frozen=True)
class NonCrossing:
    radius: Optional[int]
    exact: bool = False

    verdict = "non_crossing"


@dataclass(frozen=True)
class Unresolved:
    missing: int

    verdict = "unresolved"


CrossingVerdict = Union[Crossing, NonCrossing, Unresolved]


def collect_walls(oracle: MembershipOracle, b: Ball, budget: Optional[SearchBudget] = None) -> WallRegistry:
    """All walls crossed by edges of the ball, deduplicated."""
    registry = WallRegistry(oracle, budget)
    for u, letter, v in b.edges():
        for key in keys_of_edge(PathEdge(0, u, letter, v)):
            registry.add(key)
    logger.info("Collected %d walls from the ball of radius %d", len(registry), b.radius)
    return registry


@dataclass
class SideTable:
    """Side bits of each wall over the vertices of a ball, as integer bitmasks.

    Bit k refers to ball.order[k]; a vertex whose side is unresolved sets
    neither mask.
    """

    walls: list[WallKey]
    ball: Ball
    block: list[int] = field(default_factory=list)
    co: list[int] = field(default_factory=list)
    confidence: list[Confidence] = field(default_factory=list)

    @classmethod
    def build(
        cls,
        oracle: MembershipOracle,
        walls: Sequence[WallKey],
        b: Ball,
        budget: Optional[SearchBudget] = None,
    ) -> "SideTable":
        table = cls(list(walls), b)
        for key in table.walls:
            block = co = 0
            tiers = [Confidence.CERTIFIED]
            for k, g in enumerate(b.order):
                try:
                    s, tier = side(oracle, key, g, budget)
                except UnresolvedEdge:
                    tiers.append(Confidence.UNRESOLVED)
                    continue
                tiers.append(tier)
                if s is Side.BLOCK:
                    block |= 1 << k
                else:
                    co |= 1 << k
            table.block.append(block)
            table.co.append(co)
            table.confidence.append(weakest(*tiers))
        return table

    @property
    def full(self) -> int:
        return (1 << len(self.ball)) - 1

    def unresolved(self, a: int) -> int:
        return self.full & ~(self.block[a] | self.co[a])

    def vertex(self, mask: int) -> Element:
        return self.ball.order[(mask & -mask).bit_length() - 1]

    def bits(self, k: int) -> tuple[str, str]:
        """Side bits of vertex k over all walls ('1' block, '0' co) and the unresolved marks."""
        bits = []
        marks = []
        for a in range(len(self.walls)):
            if self.block[a] >> k & 1:
                bits.append("1")
                marks.append("0")
            elif self.co[a] >> k & 1:
                bits.append("0")
                marks.append("0")
            else:
                bits.append("?")
                marks.append("1")
        return "".join(bits), "".join(marks)

    def cross(self, a: int, b: int) -> CrossingVerdict:
        ka, kb = self.walls[a], self.walls[b]
        if a == b:
            raise ValueError(f"A wall is not tested against itself ({ka.label})")
        # distinct vertical walls are distinct tree edges; distinct horizontal walls are nested
        same_family = type(ka) is type(kb)
        if same_family and isinstance(ka, (VerticalKey, HorizontalKey)):
            return NonCrossing(radius=None, exact=True)
        sides_a = (self.block[a], self.co[a])
        sides_b = (self.block[b], self.co[b])
        pairs = [(sa, sb) for sa in sides_a for sb in sides_b]
        quadrants = [sa & sb for sa, sb in pairs]
        if all(quadrants):
            return Crossing(tuple(self.vertex(q) for q in quadrants))
        ua, ub = self.unresolved(a), self.unresolved(b)
        missing = sum(1 for (sa, sb), q in zip(pairs, quadrants) if not q and (sa | ua) & (sb | ub))
        if missing:
            return Unresolved(missing)
        return NonCrossing(radius=self.ball.radius)


def cross_test(
    oracle: MembershipOracle,
    k1: WallKey,
    k2: WallKey,
    search: Ball,
    budget: Optional[SearchBudget] = None,
) -> CrossingVerdict:
    return SideTable.build(oracle, [k1, k2], search, budget).cross(0, 1)


def composition(keys: Sequence[WallKey]) -> tuple[int, int, Counter]:
    vertical = sum(isinstance(k, VerticalKey) for k in keys)
    horizontal = sum(isinstance(k, HorizontalKey) for k in keys)
    per_i = Counter(k.i for k in keys if isinstance(k, VertizontalKey))
    return vertical, horizontal, per_i


def composition_ok(keys: Sequence[WallKey]) -> bool:
    """At most one vertical, one horizontal and two walls per vertizontal family."""
    vertical, horizontal, per_i = composition(keys)
    return vertical <= 1 and horizontal <= 1 and all(c <= 2 for c in per_i.values())


def clique_record(keys: Sequence[WallKey]) -> CliqueRecord:
    vertical, horizontal, per_i = composition(keys)
    return CliqueRecord(
        walls=[k.label for k in keys],
        size=len(keys),
        vertical=vertical,
        horizontal=horizontal,
        vertizontal=dict(sorted(per_i.items())),
        composition_ok=composition_ok(keys),
    )


@dataclass
class CrossingGraph:
    graph: nx.Graph
    verdicts: dict[tuple[int, int], CrossingVerdict]
    report: CrossingGraphReport

    def pairs(self) -> list[CrossingPairRecord]:
        table_walls = self.report.walls
        out = []
        for (a, b), v in sorted(self.verdicts.items()):
            out.append(
                CrossingPairRecord(
                    a=table_walls[a],
                    b=table_walls[b],
                    verdict=v.verdict,
                    witnesses=[g.format() for g in v.witnesses] if isinstance(v, Crossing) else [],
                    radius=v.radius if isinstance(v, NonCrossing) else None,
                    exact=isinstance(v, NonCrossing) and v.exact,
                )
            )
        return out


def crossing_graph(table: SideTable, n: int) -> CrossingGraph:
    """Crossing graph with an exact inventory of maximal cliques."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(table.walls)))
    verdicts: dict[tuple[int, int], CrossingVerdict] = {}
    for a, b in combinations(range(len(table.walls)), 2):
        v = table.cross(a, b)
        verdicts[(a, b)] = v
        if isinstance(v, Crossing):
            graph.add_edge(a, b)
    unresolved = sum(isinstance(v, Unresolved) for v in verdicts.values())
    if unresolved:
        logger.warning("%d wall pairs have unresolved crossing verdicts", unresolved)

    maximal = [sorted(c) for c in nx.find_cliques(graph)]
    best = max((len(c) for c in maximal), default=0)
    all_ok = True
    records = []
    for clique in sorted(maximal, key=lambda c: (-len(c), c)):
        keys = [table.walls[k] for k in clique]
        ok = composition_ok(keys)
        all_ok &= ok
        if not ok:
            logger.warning("Clique %s violates the composition bounds", [k.label for k in keys])
        if len(clique) == best or not ok:
            records.append(clique_record(keys))
    bound = 2 * n + 2
    report = CrossingGraphReport(
        n=n,
        search_radius=table.ball.radius,
        walls=[k.label for k in table.walls],
        crossing_pairs=sorted(graph.edges()),
        unresolved_pairs=unresolved,
        cliques=records,
        max_clique=best,
        bound=bound,
        within_bound=best <= bound,
        composition_ok=all_ok,
    )
    logger.info("Crossing graph: %d walls, %d crossing pairs, max clique %d", len(table.walls), graph.number_of_edges(), best)
    return CrossingGraph(graph, verdicts, report)
