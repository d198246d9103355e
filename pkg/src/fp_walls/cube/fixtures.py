"""Explicit wall families and crossing witnesses."""
from dataclasses import dataclass

from fp_walls.core import Element, GroupContext
from fp_walls.walls import HorizontalKey, VerticalKey, VertizontalKey, WallKey


def standard_family(ctx: GroupContext) -> list[WallKey]:
    """Y, V_1, and T_i, y T_i for every i."""
    y = ctx.element("y")
    family: list[WallKey] = [HorizontalKey(()), VerticalKey((), 1)]
    for i in ctx.indices:
        family.append(VertizontalKey(i, ctx.identity))
        family.append(VertizontalKey(i, y))
    return family


def vertical_vertizontal_family(ctx: GroupContext) -> list[WallKey]:
    """V_1 with T_i, y T_i for every i: pairwise crossing, of size 2n + 1."""
    return [k for k in standard_family(ctx) if not isinstance(k, HorizontalKey)]


@dataclass(frozen=True)
class WitnessFixture:
    name: str
    walls: tuple[WallKey, WallKey]
    words: tuple[str, str, str, str]

    def elements(self, ctx: GroupContext) -> list[Element]:
        return [ctx.element(w) for w in self.words]


def witness_fixtures(ctx: GroupContext) -> list[WitnessFixture]:
    """Four elements per pair, one in each side combination of the two walls."""
    e = ctx.identity
    y = ctx.element("y")
    Y, V1 = HorizontalKey(()), VerticalKey((), 1)

    def T(i: int) -> VertizontalKey:
        return VertizontalKey(i, e)

    def yT(i: int) -> VertizontalKey:
        return VertizontalKey(i, y)

    out = [WitnessFixture("Y x V1", (Y, V1), ("", "t1", "y", "y t1"))]
    for i in ctx.indices:
        out.append(WitnessFixture(f"Y x T{i}", (Y, T(i)), ("", "y", f"t{i}", f"y t{i} y^-1 t{i}")))
        out.append(WitnessFixture(f"T{i} x yT{i}", (T(i), yT(i)), ("", f"t{i}", f"y t{i}", f"t{i} y t{i}")))
    out.append(WitnessFixture("V1 x T1", (V1, T(1)), ("", "x1", "t1", "y t1 y^-1")))
    out.append(WitnessFixture("V1 x yT1", (V1, yT(1)), ("", "t1", "y t1", "y x1")))
    for j in ctx.indices:
        if j == 1:
            continue
        out.append(WitnessFixture(f"V1 x T{j}", (V1, T(j)), ("", "t1", f"t{j}", f"t1 t{j}")))
        out.append(WitnessFixture(f"V1 x yT{j}", (V1, yT(j)), ("", "t1", f"y t{j}", f"y t1 t{j}")))
    for i in ctx.indices:
        for j in ctx.indices:
            if i < j:
                out.append(WitnessFixture(f"T{i} x T{j}", (T(i), T(j)), ("", f"t{i}", f"t{j}", f"t{j} t{i}")))
                out.append(
                    WitnessFixture(f"yT{i} x yT{j}", (yT(i), yT(j)), ("", f"y t{i}", f"y t{j}", f"y t{j} t{i}"))
                )
            if i != j:
                out.append(WitnessFixture(f"T{i} x yT{j}", (T(i), yT(j)), ("", f"t{i}", f"y t{j}", f"t{i} y x{j}")))
    return out


def non_crossing_fixtures(ctx: GroupContext) -> list[WitnessFixture]:
    """Y against y T_i: the four listed elements only realize three side combinations."""
    y = ctx.element("y")
    return [
        WitnessFixture(f"Y x yT{i}", (HorizontalKey(()), VertizontalKey(i, y)), ("", "y", f"y t{i}", f"t{i} y t{i}"))
        for i in ctx.indices
    ]


def element_identities(ctx: GroupContext) -> list[tuple[str, str]]:
    """Pairs of words naming the same element."""
    return [
        ("t1 y x2", "y x1^-1 t1 x2"),
        ("y x2^-1 t2 x1", "t2 y x1"),
    ]
