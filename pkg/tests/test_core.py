import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import elements, words
from fp_walls.core import (
    IDENTITY,
    Element,
    GroupContext,
    commutator,
    element_of_word,
    format_word,
    from_wt_form,
    grid_word,
    invert,
    invert_word,
    multiply,
    parse_word,
    power,
    sigma_apply,
    smin_length,
    to_s_word,
    to_smin_word,
    to_wt_form,
)
from fp_walls.errors import FPError, IndexOutOfRange, WordParseError
from fp_walls.levels import phi_i


def test_normal_form_examples(ctx2):
    assert ctx2.element("y t1").format() == "(t1, y x1)"
    assert ctx2.element("").format() == "(ε, ε)"
    assert ctx2.element("t1 t1^-1 y y^-1").is_identity
    assert ctx2.element("t2 x1") == Element((2,), (2,))


def test_defining_relations(ctx2, ctx3):
    for ctx in (ctx2, ctx3):
        for i in ctx.indices:
            assert ctx.element(f"t{i}^-1 y t{i}") == ctx.element(f"y x{i}")
            for j in ctx.indices:
                assert ctx.element(f"t{j}^-1 x{i} t{j} x{i}^-1").is_identity


@pytest.mark.parametrize("left, right", [("t1 y x2", "y x1^-1 t1 x2"), ("y x2^-1 t2 x1", "t2 y x1")])
def test_element_identities(ctx2, left, right):
    assert ctx2.element(left) == ctx2.element(right)


def test_sigma_on_generators():
    # sigma(t_i^s)(y) = y x_i^s, x letters fixed
    assert sigma_apply((1,), (1,)) == (1, 2)
    assert sigma_apply((-2,), (1,)) == (1, -3)
    assert sigma_apply((1,), (-1,)) == (-2, -1)
    assert sigma_apply((1, 2), (3,)) == (3,)


def test_sigma_composition_reverses_order(ctx2):
    # sigma(t t') = sigma(t') o sigma(t)
    w = ctx2.element("y x2 y^-1").w
    assert sigma_apply((1, 2), w) == sigma_apply((2,), sigma_apply((1,), w))


def test_parse_and_format():
    word = parse_word("y y t1^-1 t1^-1 x2^3")
    assert format_word(word) == "y^2 t1^-2 x2^3"
    assert parse_word("") == ()


def test_parse_errors(ctx2):
    with pytest.raises(WordParseError):
        parse_word("z1")
    with pytest.raises(WordParseError):
        parse_word("t1^")
    with pytest.raises(IndexOutOfRange):
        ctx2.parse("t3")
    with pytest.raises(IndexOutOfRange):
        parse_word("x0")


def test_context_rank():
    with pytest.raises(FPError):
        GroupContext(1)
    ctx = GroupContext(3)
    assert len(ctx.smin_letters()) == 8
    assert len(ctx.s_letters()) == 14
    assert ctx.next_index(3) == 1


@settings(max_examples=200)
@given(elements(), elements(), elements())
def test_associativity(a, b, c):
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@settings(max_examples=200)
@given(elements())
def test_inverse(a):
    assert multiply(a, invert(a)) == IDENTITY
    assert multiply(invert(a), a) == IDENTITY


@settings(max_examples=200)
@given(words())
def test_word_evaluation_is_a_morphism(word):
    assert element_of_word(invert_word(word)) == invert(element_of_word(word))


@settings(max_examples=200)
@given(elements(max_size=14))
def test_smin_and_s_words_evaluate_back(a):
    assert element_of_word(to_smin_word(a)) == a
    assert element_of_word(to_s_word(a)) == a
    assert smin_length(a) == len(to_smin_word(a))


@settings(max_examples=200)
@given(elements(max_size=14))
def test_wt_form(a):
    w, t = to_wt_form(a)
    assert from_wt_form(w, t) == a
    assert multiply(Element((), w), Element(t, ())) == a


@given(elements(), st.integers(-4, 4), st.integers(-4, 4))
def test_power_adds_exponents(a, k, m):
    assert multiply(power(a, k), power(a, m)) == power(a, k + m)


def test_commutator_of_commuting_letters(ctx2):
    assert commutator(ctx2.element("t1"), ctx2.element("x2")).is_identity
    assert not commutator(ctx2.element("t1"), ctx2.element("y")).is_identity


@settings(max_examples=200)
@given(
    st.integers(1, 2),
    st.integers(1, 5).flatmap(lambda m: st.lists(st.integers(-5, 5), min_size=2 * m, max_size=2 * m)),
)
def test_grid_word_closed_form(i, ks):
    ctx = GroupContext(2)
    g = element_of_word(grid_word(i, ks))
    odd = sum(ks[1::2])
    assert to_wt_form(g) == (ctx.element(f"y x{i}^{odd} y^-1").w, ctx.element(f"t{i}^{sum(ks)}").t)
    assert phi_i(g, i) == odd


def test_grid_word_rejects_odd_lists():
    with pytest.raises(FPError):
        grid_word(1, [1, 2, 3])
