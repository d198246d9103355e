from enum import Enum
from typing import Iterable, Optional

from fp_walls.core import (
    Element,
    GenLetter,
    Kind,
    invert,
    multiply,
    multiply_letter,
    to_smin_word,
)
from fp_walls.core.words import Y_CODE, invert_codes, reduce_codes
from fp_walls.errors import UnresolvedEdge
from fp_walls.subgroup import MembershipOracle
from fp_walls.types import Confidence, SearchBudget, weakest
from fp_walls.walls.keys import HorizontalKey, VerticalKey, VertizontalKey, WallKey


class Side(str, Enum):
    BLOCK = "block"
    CO = "co"


def side_horizontal(key: HorizontalKey, g: Element) -> Side:
    """Block side: the horizontal part of rep^-1 g starts with y."""
    h = multiply(invert(key.element), g)
    return Side.BLOCK if h.w and h.w[0] == Y_CODE else Side.CO


def side_vertical(key: VerticalKey, g: Element) -> Side:
    """Block side: prefix^-1 pi_v(g) starts with t_j; the horizontal part of g plays no role."""
    t = reduce_codes(invert_codes(key.prefix) + g.t)
    return Side.BLOCK if t and t[0] == key.j else Side.CO


def vertizontal_parity(
    oracle: MembershipOracle,
    i: int,
    word: Iterable[GenLetter],
    budget: Optional[SearchBudget] = None,
) -> tuple[int, Confidence]:
    """Number of E_i edges crossed, mod 2, walking word from e.

    Raises UnresolvedEdge on a t_i step whose membership is Unknown.
    """
    current = oracle.ctx.identity
    parity = 0
    tiers = [Confidence.CERTIFIED]
    for letter in word:
        following = multiply_letter(current, letter)
        if letter.kind is Kind.T and letter.index == i:
            base = current if letter.sign > 0 else following
            m = oracle.membership(i, base, budget)
            if m.is_member is None:
                raise UnresolvedEdge(i, base, m)
            tiers.append(m.confidence)
            if m.is_member:
                parity ^= 1
        current = following
    return parity, weakest(*tiers)


def side_vertizontal(
    oracle: MembershipOracle,
    key: VertizontalKey,
    g: Element,
    budget: Optional[SearchBudget] = None,
) -> tuple[Side, Confidence]:
    """Block side is the component of base: an even number of E_i crossings on the way to g."""
    h = multiply(invert(key.base), g)
    parity, confidence = vertizontal_parity(oracle, key.i, to_smin_word(h), budget)
    return (Side.BLOCK if parity == 0 else Side.CO), confidence


def side(
    oracle: Optional[MembershipOracle],
    key: WallKey,
    g: Element,
    budget: Optional[SearchBudget] = None,
) -> tuple[Side, Confidence]:
    if isinstance(key, HorizontalKey):
        return side_horizontal(key, g), Confidence.CERTIFIED
    if isinstance(key, VerticalKey):
        return side_vertical(key, g), Confidence.CERTIFIED
    if oracle is None:
        raise ValueError("Vertizontal sides need a membership oracle")
    return side_vertizontal(oracle, key, g, budget)


def separates(
    oracle: Optional[MembershipOracle],
    key: WallKey,
    g: Element,
    h: Element,
    budget: Optional[SearchBudget] = None,
) -> tuple[bool, Confidence]:
    side_g, conf_g = side(oracle, key, g, budget)
    side_h, conf_h = side(oracle, key, h, budget)
    return side_g != side_h, weakest(conf_g, conf_h)
