"""Identities of the three wall families.

A horizontal wall rep.(Y, Y^c) is named by its horizontal representative,
a vertical wall by the edge (prefix, prefix t_j) of the vertical tree, and a
vertizontal wall base.(T_i, T_i^c) by any base point of its left coset
base H_i. Keys of the first two families compare exactly; vertizontal keys
are compared through the membership oracle (see WallRegistry).
"""
from dataclasses import dataclass
from typing import Union

from fp_walls.core import (
    Element,
    GroupContext,
    HorizWord,
    VertWord,
    format_horizontal,
    format_vertical,
    from_wt_form,
    to_wt_form,
)
from fp_walls.core.words import reduce_codes
from fp_walls.errors import WordParseError
from fp_walls.types import WallKeyRecord


@dataclass(frozen=True, slots=True)
class HorizontalKey:
    rep: HorizWord

    family = "horizontal"

    @property
    def element(self) -> Element:
        return from_wt_form(self.rep, ())

    @property
    def label(self) -> str:
        return f"h:{format_horizontal(self.rep)}"

    def record(self) -> WallKeyRecord:
        return WallKeyRecord(family="horizontal", rep=format_horizontal(self.rep), label=self.label)


@dataclass(frozen=True, slots=True)
class VerticalKey:
    """The wall dual to the t_j-edge (prefix, prefix t_j) of the vertical tree.

    prefix is any reduced vertical word and may end in t_j^-1; the edge then
    runs from prefix back to its parent. The key is kept as given; the parent
    key names the opposite orientation. The block side is the set of
    g with prefix^-1 pi_v(g) starting with t_j, so prefix itself always lies on
    the co side and prefix t_j on the block side.
    """

    prefix: VertWord
    j: int

    family = "vertical"

    def __post_init__(self):
        if reduce_codes(self.prefix) != tuple(self.prefix):
            raise ValueError(f"Vertical key prefix must be reduced, got {self.prefix}")

    @property
    def label(self) -> str:
        return f"v:{format_vertical(self.prefix)}:{self.j}"

    def record(self) -> WallKeyRecord:
        return WallKeyRecord(family="vertical", j=self.j, prefix=format_vertical(self.prefix), label=self.label)


@dataclass(frozen=True, slots=True)
class VertizontalKey:
    i: int
    base: Element

    family = "vertizontal"

    @property
    def label(self) -> str:
        return f"z:{self.i}:{self.base.format()}"

    def record(self) -> WallKeyRecord:
        return WallKeyRecord(family="vertizontal", i=self.i, base=self.base.format(), label=self.label)


WallKey = Union[HorizontalKey, VerticalKey, VertizontalKey]


def horizontal_key_of_edge(u: Element) -> HorizontalKey:
    """Key of the wall crossed by the y-edge (u, u y)."""
    return HorizontalKey(to_wt_form(u)[0])


def vertical_key_of_edge(u: Element, j: int) -> VerticalKey:
    """Key of the vertical wall crossed by the t_j-edge (u, u t_j)."""
    return VerticalKey(u.t, j)


def vertizontal_key_of_edge(u: Element, i: int) -> VertizontalKey:
    return VertizontalKey(i, u)


def parse_wall_spec(ctx: GroupContext, text: str) -> WallKey:
    """Parse ``h:<word>``, ``v:<prefix>:<j>`` or ``z:<i>:<base>``.

    For ``h:`` any word is accepted; the wall g.(Y, Y^c) only depends on the
    horizontal part of g in wt-form.
    """
    family, _, rest = text.partition(":")
    if family == "h":
        return HorizontalKey(to_wt_form(ctx.element(rest))[0])
    if family == "v":
        prefix, _, j = rest.rpartition(":")
        g = ctx.element(prefix)
        if g.w:
            raise WordParseError(prefix, f"Vertical wall prefix '{prefix}' must be a word in t letters")
        return VerticalKey(g.t, ctx.check_index(_index(j)))
    if family == "z":
        i, _, base = rest.partition(":")
        return VertizontalKey(ctx.check_index(_index(i)), ctx.element(base))
    raise WordParseError(text, f"Wall spec '{text}' not recognized; use h:<word>, v:<prefix>:<j> or z:<i>:<base>")


def _index(token: str) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise WordParseError(token, f"Wall index '{token}' is not an integer") from e
