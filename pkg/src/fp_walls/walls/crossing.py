"""Wall crossings along paths and the wall pseudo-metric omega."""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Optional

from fp_walls.cayley import Path, PathEdge
from fp_walls.core import Element, Kind, invert, multiply, to_smin_word
from fp_walls.core.words import invert_codes, reduce_codes
from fp_walls.errors import UnresolvedEdge
from fp_walls.subgroup import MembershipOracle
from fp_walls.types import (
    Confidence,
    CrossedRecord,
    OmegaReport,
    SearchBudget,
    WallCrossingRecord,
    weakest,
)
from fp_walls.walls.keys import (
    HorizontalKey,
    VertizontalKey,
    WallKey,
    horizontal_key_of_edge,
    vertical_key_of_edge,
    vertizontal_key_of_edge,
)
from fp_walls.walls.sides import separates

logger = logging.getLogger(__name__)


class WallRegistry:
    """Deduplicated wall keys with stable indices.

    Vertizontal keys are bucketed by a coset signature of base H_i and then
    merged when the oracle certifies b1^-1 b2 in H_i. Comparisons left
    Unknown keep the keys apart and mark the registry as possibly
    overcounting.
    """

    def __init__(self, oracle: MembershipOracle, budget: Optional[SearchBudget] = None):
        self.oracle = oracle
        self.budget = budget
        self.keys: list[WallKey] = []
        self._exact: dict[WallKey, int] = {}
        self._buckets: dict[tuple[int, Hashable], list[int]] = {}
        self.confidence = Confidence.CERTIFIED
        self.unmerged = 0

    def __len__(self) -> int:
        return len(self.keys)

    def __iter__(self):
        return iter(self.keys)

    def _signature(self, key: VertizontalKey) -> tuple[int, Hashable]:
        return key.i, self.oracle.coset_signature(key.i, key.base)

    def lookup(self, key: WallKey) -> Optional[int]:
        if not isinstance(key, VertizontalKey):
            return self._exact.get(key)
        if key in self._exact:
            return self._exact[key]
        for index in self._buckets.get(self._signature(key), []):
            other = self.keys[index]
            m = self.oracle.membership(key.i, multiply(invert(other.base), key.base), self.budget)
            if m.is_member is None:
                self.unmerged += 1
                self.confidence = Confidence.UNRESOLVED
                continue
            self.confidence = weakest(self.confidence, m.confidence)
            if m.is_member:
                self._exact[key] = index
                return index
        return None

    def add(self, key: WallKey) -> int:
        index = self.lookup(key)
        if index is not None:
            return index
        index = len(self.keys)
        self.keys.append(key)
        self._exact[key] = index
        if isinstance(key, VertizontalKey):
            self._buckets.setdefault(self._signature(key), []).append(index)
        return index

    def labels(self) -> list[str]:
        return [key.label for key in self.keys]


def keys_of_edge(edge: PathEdge) -> list[WallKey]:
    """y-edges cross one horizontal wall, t_j-edges one vertical and one vertizontal wall."""
    base, letter = edge.cell
    if letter.kind is Kind.Y:
        return [horizontal_key_of_edge(base)]
    if letter.kind is Kind.T:
        return [vertical_key_of_edge(base, letter.index), vertizontal_key_of_edge(base, letter.index)]
    raise ValueError(f"Wall crossings are read along S_min paths, got letter {letter}")


@dataclass
class WallCrossing:
    position: int
    index: int
    key: WallKey
    sign: int


@dataclass
class WallCrossingReport:
    path: Path
    crossings: list[WallCrossing] = field(default_factory=list)
    net: Counter = field(default_factory=Counter)
    confidence: Confidence = Confidence.CERTIFIED

    def record(self, registry: WallRegistry) -> WallCrossingRecord:
        return WallCrossingRecord(
            path=str(self.path),
            crossings=[CrossedRecord(position=c.position, wall=c.key.record(), sign=c.sign) for c in self.crossings],
            net=[(registry.keys[k].label, v) for k, v in sorted(self.net.items())],
            confidence=self.confidence,
        )


def walls_crossed(registry: WallRegistry, p: Path) -> WallCrossingReport:
    """Every wall crossed along p, signed by the letter direction, with net counts per wall."""
    report = WallCrossingReport(p)
    for edge in p.edges():
        for key in keys_of_edge(edge):
            index = registry.add(key)
            report.crossings.append(WallCrossing(edge.position, index, registry.keys[index], edge.letter.sign))
            report.net[index] += edge.letter.sign
    report.confidence = registry.confidence
    return report


def omega(
    oracle: MembershipOracle,
    g: Element,
    h: Element,
    budget: Optional[SearchBudget] = None,
    registry: Optional[WallRegistry] = None,
) -> OmegaReport:
    """Number of walls separating g and h, by family.

    Candidates are the walls crossed by the path g . to_smin_word(g^-1 h);
    every separating wall is crossed by every path from g to h.
    """
    registry = registry or WallRegistry(oracle, budget)
    vertical = len(reduce_codes(invert_codes(g.t) + h.t))
    path = Path(g, to_smin_word(multiply(invert(g), h)))
    report = walls_crossed(registry, path)
    horizontal = 0
    vertizontal: Counter = Counter()
    tiers = [report.confidence]
    upper_bound = registry.unmerged > 0
    for index in sorted(set(c.index for c in report.crossings)):
        key = registry.keys[index]
        if isinstance(key, HorizontalKey):
            horizontal += separates(None, key, g, h)[0]
        elif isinstance(key, VertizontalKey):
            try:
                split, confidence = separates(oracle, key, g, h, budget)
            except UnresolvedEdge as e:
                logger.warning("Side of %s unresolved: %s", key.label, e)
                tiers.append(Confidence.UNRESOLVED)
                upper_bound = True
                vertizontal[key.i] += 1
                continue
            tiers.append(confidence)
            vertizontal[key.i] += split
    confidence = weakest(*tiers)
    result = OmegaReport(
        g=g.format(),
        h=h.format(),
        total=vertical + horizontal + sum(vertizontal.values()),
        vertical=vertical,
        horizontal=horizontal,
        vertizontal={i: vertizontal.get(i, 0) for i in oracle.ctx.indices},
        confidence=confidence,
        upper_bound=upper_bound,
    )
    logger.debug("omega(%s, %s) = %d [%s]", g, h, result.total, confidence.value)
    return result
