"""Edges of E_i = H_i (e, t_i) and the components of a ball with E_i removed."""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from fp_walls.cayley.ball import Ball
from fp_walls.core import Element, Kind, T, invert, multiply, multiply_letter
from fp_walls.subgroup import MembershipOracle
from fp_walls.types import (
    Confidence,
    ComponentReport,
    CoverageReport,
    Membership3,
    SearchBudget,
    TranslateReport,
)
from fp_walls.utils import UnionFind

logger = logging.getLogger(__name__)


class EdgeVerdict(str, Enum):
    IN = "in_Ei"
    NOT_IN = "not_in_Ei"
    UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class EdgeStatus:
    i: int
    base: Element
    verdict: EdgeVerdict
    membership: Membership3

    @property
    def confidence(self) -> Confidence:
        return self.membership.confidence


def edge_in_Ei(oracle: MembershipOracle, i: int, u: Element, budget: Optional[SearchBudget] = None) -> EdgeStatus:
    """Status of the 1-cell (u, u t_i): in E_i exactly when u lies in H_i."""
    m = oracle.membership(i, u, budget)
    if m.is_member is None:
        verdict = EdgeVerdict.UNRESOLVED
    elif m.is_member:
        verdict = EdgeVerdict.IN
    else:
        verdict = EdgeVerdict.NOT_IN
    return EdgeStatus(i, u, verdict, m)


@dataclass
class Separation:
    i: int
    ball: Ball
    components: UnionFind
    cut: list[Element]
    unresolved: list[Element]
    stabilized: int

    @property
    def certified(self) -> bool:
        return not self.unresolved and self.stabilized == 0

    def component_of(self, g: Element) -> Optional[Element]:
        if g not in self.ball:
            return None
        return self.components.find(g)


def split_minus_Ei(oracle: MembershipOracle, i: int, b: Ball, budget: Optional[SearchBudget] = None) -> Separation:
    """Union-find over the ball, joining across every edge except those of E_i.

    Unresolved t_i-edges are joined, so a missed cut can only merge the
    tracked components.
    """
    if b.genset != "smin":
        raise ValueError(f"Separation runs need a ball over S_min, got {b.genset}")
    oracle.ctx.check_index(i)
    uf = UnionFind(b.order)
    cut: list[Element] = []
    unresolved: list[Element] = []
    stabilized = 0
    for u, letter, v in b.edges():
        if letter.kind is Kind.T and letter.index == i:
            status = edge_in_Ei(oracle, i, u, budget)
            if status.verdict is EdgeVerdict.IN:
                cut.append(u)
                continue
            if status.verdict is EdgeVerdict.UNRESOLVED:
                unresolved.append(u)
            elif status.confidence is Confidence.STABILIZED:
                stabilized += 1
        uf.union(u, v)
    if unresolved:
        logger.warning("%d t%d-edges unresolved in ball of radius %d", len(unresolved), i, b.radius)
    if stabilized:
        logger.warning("%d t%d-edges rely on stabilized enumeration", stabilized, i)
    return Separation(i, b, uf, cut, unresolved, stabilized)


def components_minus_Ei(
    oracle: MembershipOracle,
    i: int,
    b: Ball,
    budget: Optional[SearchBudget] = None,
    separation: Optional[Separation] = None,
) -> ComponentReport:
    sep = separation or split_minus_Ei(oracle, i, b, budget)
    e = oracle.ctx.identity
    ti = multiply_letter(e, T(i))
    root_e = sep.component_of(e)
    root_t = sep.component_of(ti)
    size_e = sep.components.component_size(e)
    size_t = sep.components.component_size(ti) if root_t is not None else 0
    stranded = [g for g in b.order if sep.components.find(g) not in (root_e, root_t)]
    report = ComponentReport(
        i=i,
        radius=b.radius,
        vertices=len(b),
        certified=sep.certified,
        component_e=size_e,
        component_ti=size_t,
        disjoint=root_e != root_t,
        stranded=len(stranded),
        stranded_sample=[g.format() for g in stranded[:10]],
        edges_in_Ei=len(sep.cut),
        unresolved=len(sep.unresolved),
        stabilized_edges=sep.stabilized,
    )
    logger.info(
        "Components of B_%d minus E_%d: |C(e)|=%d |C(t)|=%d disjoint=%s",
        b.radius, i, size_e, size_t, report.disjoint,
    )
    return report


def coverage_minus_Ei(
    oracle: MembershipOracle,
    i: int,
    b: Ball,
    margin: int,
    budget: Optional[SearchBudget] = None,
    separation: Optional[Separation] = None,
) -> CoverageReport:
    """Share of the inner ball B_{R - margin} lying in the components of e or t_i."""
    if margin < 0:
        raise ValueError(f"Margin must be non-negative, got {margin}")
    sep = separation or split_minus_Ei(oracle, i, b, budget)
    e = oracle.ctx.identity
    roots = {sep.component_of(e), sep.component_of(multiply_letter(e, T(i)))} - {None}
    inner = b.inner(max(b.radius - margin, 0))
    covered = sum(1 for g in inner if sep.components.find(g) in roots)
    return CoverageReport(
        i=i,
        radius=b.radius,
        margin=margin,
        inner_vertices=len(inner),
        covered=covered,
        fraction=covered / len(inner),
    )


def translate_disjointness(
    oracle: MembershipOracle, i: int, g: Element, b: Ball, budget: Optional[SearchBudget] = None
) -> TranslateReport:
    """No t_i-edge of the ball lies in both E_i and g E_i."""
    g_inv = invert(g)
    violations: list[str] = []
    checked = 0
    for u in b.order:
        checked += 1
        if oracle.membership(i, u, budget).is_member is not True:
            continue
        if oracle.membership(i, multiply(g_inv, u), budget).is_member is True:
            violations.append(u.format())
    if violations:
        logger.warning("E_%d and its translate by %s share %d edges", i, g, len(violations))
    return TranslateReport(i=i, translate=g.format(), edges_checked=checked, violations=violations)
