"""Rerouting paths that join the neighbours of e and t_i without touching E_i."""
import logging
from dataclasses import dataclass
from typing import Literal, Optional

from fp_walls.cayley.ball import Path
from fp_walls.cayley.components import EdgeVerdict, edge_in_Ei
from fp_walls.core import GroupContext, Kind
from fp_walls.subgroup import MembershipOracle
from fp_walls.types import FixtureReport, SearchBudget

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FixturePath:
    name: str
    path: Path
    start: str
    word: str
    expected_end: str
    expected_side: Literal["block", "co"]


def fixture_paths(ctx: GroupContext, i: int) -> list[FixturePath]:
    ctx.check_index(i)
    j = ctx.next_index(i)
    specs = [
        ("e to x_i t_i^-1", "", f"y^-1 t{i}^-1 y", f"x{i} t{i}^-1", "block"),
        ("e to y x_i y^-1 t_i", "", f"y t{i} y^-1", f"y x{i} y^-1 t{i}", "block"),
        ("e to t_i+1", "", f"t{j}", f"t{j}", "block"),
        ("e to x_i+1", "", f"y^-1 t{j}^-1 y t{j}", f"x{j}", "block"),
        ("t_i to x_i", f"t{i}", f"y^-1 t{i}^-1 y", f"x{i}", "co"),
        ("t_i to y x_i y^-1 t_i^2", f"t{i}", f"y t{i} y^-1", f"y x{i} y^-1 t{i}^2", "co"),
        ("t_i to x_i+1 t_i", f"t{i}", f"y^-1 t{j}^-1 y t{j}", f"x{j} t{i}", "co"),
        ("t_i to t_i+1 t_i", f"t{i}", f"y^-1 t{i}^-1 y t{j} y^-1 t{i} y", f"t{j} t{i}", "co"),
    ]
    return [
        FixturePath(name, Path.parse(ctx, word, ctx.element(start)), start, word, end, side)
        for name, start, word, end, side in specs
    ]


def validate_fixture(
    oracle: MembershipOracle, i: int, fixture: FixturePath, budget: Optional[SearchBudget] = None
) -> FixtureReport:
    """Check the endpoint and that no t_i-edge of the path lies in E_i."""
    ctx = oracle.ctx
    reached = fixture.path.end
    avoids = True
    unresolved = 0
    for edge in fixture.path.edges():
        base, letter = edge.cell
        if letter.kind is not Kind.T or letter.index != i:
            continue
        status = edge_in_Ei(oracle, i, base, budget)
        if status.verdict is EdgeVerdict.IN:
            avoids = False
        elif status.verdict is EdgeVerdict.UNRESOLVED:
            unresolved += 1
    report = FixtureReport(
        i=i,
        name=fixture.name,
        start=fixture.start,
        word=fixture.word,
        expected_end=fixture.expected_end,
        reached_end=reached.format(),
        expected_side=fixture.expected_side,
        endpoint_ok=reached == ctx.element(fixture.expected_end),
        avoids_Ei=avoids,
        unresolved=unresolved,
    )
    if not (report.endpoint_ok and report.avoids_Ei):
        logger.warning("Fixture '%s' for i=%d failed: %s", fixture.name, i, report)
    return report
