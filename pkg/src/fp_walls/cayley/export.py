from typing import Optional

from fp_walls.cayley.ball import Ball
from fp_walls.cayley.components import EdgeVerdict, edge_in_Ei
from fp_walls.core import Kind
from fp_walls.subgroup import MembershipOracle
from fp_walls.utils import BALL_DOT, DotRenderer


def ball_dot(b: Ball, oracle: Optional[MembershipOracle] = None, i: Optional[int] = None) -> str:
    """DOT graph of the ball; with an oracle and i, E_i edges are highlighted."""
    edges = []
    for u, letter, v in b.edges():
        cut = unresolved = False
        if oracle is not None and letter.kind is Kind.T and letter.index == i:
            verdict = edge_in_Ei(oracle, i, u).verdict
            cut = verdict is EdgeVerdict.IN
            unresolved = verdict is EdgeVerdict.UNRESOLVED
        edges.append({"a": u.format(), "b": v.format(), "label": letter.name, "cut": cut, "unresolved": unresolved})
    return DotRenderer.render(BALL_DOT, {"vertices": [g.format() for g in b.order], "edges": edges})
