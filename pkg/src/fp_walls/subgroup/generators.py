from fp_walls.core import IDENTITY, Element, GroupContext, element_of_word, invert, multiply, parse_word
from fp_walls.errors import PropertyViolation


def _word(ctx: GroupContext, text: str) -> Element:
    return element_of_word(parse_word(text, ctx.n))


def h_generators(ctx: GroupContext, i: int) -> list[Element]:
    """Generators of H_i: x_j, t_j for j != i, then y x_i y^-1 t_i and x_i t_i^-1."""
    ctx.check_index(i)
    gens: list[Element] = []
    for j in ctx.indices:
        if j != i:
            gens.append(_word(ctx, f"x{j}"))
            gens.append(_word(ctx, f"t{j}"))
    gens.append(_word(ctx, f"y x{i} y^-1 t{i}"))
    gens.append(_word(ctx, f"x{i} t{i}^-1"))
    alternative = h_generators_smin(ctx, i)
    if gens != alternative:
        raise PropertyViolation(f"Generator sets of H_{i} over S and S_min disagree")
    return gens


def h_generators_smin(ctx: GroupContext, i: int) -> list[Element]:
    """The same generators written over S_min."""
    ctx.check_index(i)
    gens: list[Element] = []
    for j in ctx.indices:
        if j != i:
            gens.append(_word(ctx, f"y^-1 t{j}^-1 y t{j}"))
            gens.append(_word(ctx, f"t{j}"))
    gens.append(_word(ctx, f"y t{i} y^-1"))
    gens.append(_word(ctx, f"y^-1 t{i}^-1 y"))
    return gens


def evaluate_witness(gens: list[Element], witness: list[tuple[int, int]]) -> Element:
    """Left-to-right product of generator powers."""
    g = IDENTITY
    for index, sign in witness:
        g = multiply(g, gens[index] if sign > 0 else invert(gens[index]))
    return g
