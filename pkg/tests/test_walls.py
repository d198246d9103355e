import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import elements
from fp_walls.cayley import Path, ball
from fp_walls.core import Element, T, element_of_word, invert, multiply, power, smin_length, to_smin_word
from fp_walls.core.words import reduce_codes
from fp_walls.errors import IndexOutOfRange, UnresolvedEdge, WordParseError
from fp_walls.levels import group_relators
from fp_walls.subgroup import MembershipOracle
from fp_walls.types import Confidence, SearchBudget
from fp_walls.walls import (
    HorizontalKey,
    Side,
    VerticalKey,
    VertizontalKey,
    WallRegistry,
    horizontal_key_of_edge,
    omega,
    parse_wall_spec,
    separates,
    side,
    side_horizontal,
    side_vertical,
    vertical_key_of_edge,
    vertizontal_parity,
    walls_crossed,
)


def test_horizontal_sides(ctx2):
    Y = HorizontalKey(())
    assert side_horizontal(Y, ctx2.element("y")) is Side.BLOCK
    assert side_horizontal(Y, ctx2.element("y t1 x2")) is Side.BLOCK
    assert side_horizontal(Y, ctx2.identity) is Side.CO
    assert side_horizontal(Y, ctx2.element("y^-1")) is Side.CO


def test_vertical_sides(ctx2):
    V1 = VerticalKey((), 1)
    assert side_vertical(V1, ctx2.element("t1")) is Side.BLOCK
    assert side_vertical(V1, ctx2.element("t1 t2")) is Side.BLOCK
    assert side_vertical(V1, ctx2.element("y t1")) is Side.BLOCK
    assert side_vertical(V1, ctx2.element("t1^-1")) is Side.CO
    assert side_vertical(V1, ctx2.element("t2")) is Side.CO


def test_vertizontal_sides(ctx2, oracle2):
    T1 = VertizontalKey(1, ctx2.identity)
    expected = {"": Side.BLOCK, "t1": Side.CO, "t2": Side.BLOCK, "y^-1 t1^-1 y": Side.BLOCK, "x1": Side.CO}
    for word, s in expected.items():
        assert side(oracle2, T1, ctx2.element(word)) == (s, Confidence.CERTIFIED), word


def test_vertizontal_side_needs_oracle(ctx2):
    with pytest.raises(ValueError):
        side(None, VertizontalKey(1, ctx2.identity), ctx2.identity)


def test_keys_of_edges(ctx2):
    assert horizontal_key_of_edge(ctx2.element("t1")) == HorizontalKey(())
    assert horizontal_key_of_edge(ctx2.element("y^-1")) != HorizontalKey(())
    assert vertical_key_of_edge(ctx2.element("y x2"), 1) == VerticalKey((), 1)
    assert vertical_key_of_edge(ctx2.element("t1^-1"), 1) == VerticalKey((-1,), 1)
    with pytest.raises(ValueError):
        VerticalKey((1, -1), 1)


def test_parse_wall_spec(ctx2):
    assert parse_wall_spec(ctx2, "h:") == HorizontalKey(())
    assert parse_wall_spec(ctx2, "h:y") == HorizontalKey((1,))
    assert parse_wall_spec(ctx2, "v:t1:2") == VerticalKey((1,), 2)
    assert parse_wall_spec(ctx2, "v::1") == VerticalKey((), 1)
    assert parse_wall_spec(ctx2, "z:2:y") == VertizontalKey(2, ctx2.element("y"))


@pytest.mark.parametrize(
    "label, error",
    [("q:1", WordParseError), ("v:y:1", WordParseError), ("z:a:y", WordParseError), ("z:3:y", IndexOutOfRange)],
)
def test_parse_wall_spec_errors(ctx2, label, error):
    with pytest.raises(error):
        parse_wall_spec(ctx2, label)


def test_registry_merges_vertizontal_cosets(ctx2, oracle2):
    registry = WallRegistry(oracle2)
    a = registry.add(VertizontalKey(1, ctx2.identity))
    assert registry.add(VertizontalKey(1, ctx2.element("t2"))) == a
    assert registry.add(VertizontalKey(1, ctx2.element("y t1 y^-1"))) == a
    assert registry.add(VertizontalKey(1, ctx2.element("t1"))) != a
    assert registry.add(VertizontalKey(2, ctx2.identity)) != a
    assert len(registry) == 3
    assert registry.confidence is Confidence.CERTIFIED


def test_walls_crossed_profile(ctx2, oracle2):
    registry = WallRegistry(oracle2)
    report = walls_crossed(registry, Path.parse(ctx2, "y t1"))
    labels = [c.key.label for c in report.crossings]
    assert labels == ["h:", "v::1", "z:1:(ε, y)"]
    assert [c.sign for c in report.crossings] == [1, 1, 1]


def test_walls_crossed_back_and_forth(ctx2, oracle2):
    registry = WallRegistry(oracle2)
    report = walls_crossed(registry, Path.parse(ctx2, "y y^-1"))
    assert [c.sign for c in report.crossings] == [1, -1]
    assert len(registry) == 1
    assert report.net[0] == 0

    report = walls_crossed(registry, Path.parse(ctx2, "t1 t1^-1 t1"))
    assert [c.sign for c in report.crossings] == [1, 1, -1, -1, 1, 1]
    assert len(registry) == 3
    assert set(report.net.values()) == {1}


@pytest.mark.parametrize("word, total", [("y", 1), ("t1", 2), ("t2", 2), ("x1", 2), ("x2", 2), ("t1^-1", 2), ("y t1", 3)])
def test_omega_values(ctx2, oracle2, word, total):
    report = omega(oracle2, ctx2.identity, ctx2.element(word))
    assert report.total == total
    assert report.confidence is Confidence.CERTIFIED
    assert not report.upper_bound


@pytest.mark.parametrize("k", [1, 2, 3])
def test_omega_grows_linearly_along_x1(ctx2, oracle2, k):
    report = omega(oracle2, ctx2.identity, power(ctx2.element("x1"), k))
    assert report.total == 2 * k
    assert report.vertizontal == {1: 2 * k, 2: 0}


def test_omega_family_split(ctx2, oracle2):
    report = omega(oracle2, ctx2.identity, ctx2.element("t1"))
    assert (report.vertical, report.horizontal, report.vertizontal) == (1, 0, {1: 1, 2: 0})


@pytest.mark.parametrize("g, h", [("", "t1"), ("y", "x2 t1"), ("t2", "y^-1")])
@pytest.mark.parametrize("f", ["y", "t1", "t2 y^-1"])
def test_omega_is_left_invariant_and_symmetric(ctx2, oracle2, f, g, h):
    fe, ge, he = ctx2.element(f), ctx2.element(g), ctx2.element(h)
    base = omega(oracle2, ge, he).total
    assert omega(oracle2, multiply(fe, ge), multiply(fe, he)).total == base
    assert omega(oracle2, he, ge).total == base


def test_separates(ctx2, oracle2):
    e, t1 = ctx2.identity, ctx2.element("t1")
    assert separates(oracle2, VertizontalKey(1, e), e, t1) == (True, Confidence.CERTIFIED)
    assert separates(oracle2, VertizontalKey(2, e), e, t1)[0] is False
    assert separates(None, HorizontalKey(()), e, ctx2.element("y"))[0] is True
    assert separates(None, VerticalKey((), 2), e, t1)[0] is False


def test_unresolved_step_raises(ctx2):
    starved = MembershipOracle(ctx2, SearchBudget(depth=1, max_nodes=1, radius=0))
    with pytest.raises(UnresolvedEdge):
        vertizontal_parity(starved, 1, ctx2.parse("t1 t2 t1^-1 t2^-1 t1"))


@pytest.mark.parametrize("g, h, k", [("y", "t1", "x2"), ("", "y t2", "t1^-1 x1"), ("x1", "y^-1", "t2 t1")])
def test_omega_is_a_pseudo_metric(ctx2, oracle2, g, h, k):
    ge, he, ke = ctx2.element(g), ctx2.element(h), ctx2.element(k)
    assert omega(oracle2, ge, ge).total == 0
    assert omega(oracle2, ge, ke).total <= omega(oracle2, ge, he).total + omega(oracle2, he, ke).total


@settings(max_examples=150)
@given(elements(), st.lists(st.sampled_from([T(1), T(2), T(1, -1), T(2, -1)]), max_size=6))
def test_horizontal_sides_ignore_right_vertical_factors(g, vertical):
    t = element_of_word(vertical)
    for key in (HorizontalKey(()), HorizontalKey((1, 2)), HorizontalKey((-3,))):
        assert side_horizontal(key, multiply(g, t)) is side_horizontal(key, g)


@settings(max_examples=150)
@given(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=8), st.sampled_from([1, 2]))
def test_vertical_conjugation_keeps_the_horizontal_block(codes, j):
    w = reduce_codes((1,) + tuple(codes))
    assume(w and w[0] == 1)
    u = Element((), w)
    tj = Element((j,), ())
    conjugate = multiply(invert(tj), multiply(u, tj))
    assert not conjugate.t
    assert conjugate.w[0] == 1


@settings(max_examples=100)
@given(elements(), elements())
def test_vertical_sides_only_see_the_vertical_part(g, u):
    horizontal = Element((), u.w)
    for key in (VerticalKey((), 1), VerticalKey((2, -1), 2)):
        assert side_vertical(key, multiply(horizontal, g)) is side_vertical(key, g)
        assert side_vertical(key, g) is side_vertical(key, Element(g.t, ()))


def _parities_along_paths(ctx, oracle, g, geodesics, relator):
    smin = to_smin_word(g)
    paths = {
        "smin": smin,
        "geodesic": geodesics.geodesic_word(g),
        "relator-first": relator + smin,
        "relator-middle": smin[: len(smin) // 2] + relator + smin[len(smin) // 2 :],
    }
    for name, word in paths.items():
        assert element_of_word(word) == g, name
    return {
        i: {name: vertizontal_parity(oracle, i, word)[0] for name, word in paths.items()} for i in ctx.indices
    }


@pytest.mark.parametrize("word", ["t1", "y t1 x2", "x1 t1^-1 y", "t2 t1^-1 y^-1", "t1 t2 t1^-1"])
def test_vertizontal_parity_is_path_independent(ctx2, oracle2, word):
    g = ctx2.element(word)
    geodesics = ball(ctx2, smin_length(g))
    for name, relator in group_relators(ctx2):
        assert element_of_word(relator) == ctx2.identity, name
        for i, parities in _parities_along_paths(ctx2, oracle2, g, geodesics, relator).items():
            assert len(set(parities.values())) == 1, (i, name, parities)


@pytest.mark.slow
def test_vertizontal_parity_is_path_independent_on_a_ball(ctx2, oracle2):
    geodesics = ball(ctx2, 4)
    relators = [relator for _, relator in group_relators(ctx2)]
    sample = geodesics.order[:: max(len(geodesics.order) // 200, 1)][:200]
    checked = 0
    for index, g in enumerate(sample):
        try:
            table = _parities_along_paths(ctx2, oracle2, g, geodesics, relators[index % len(relators)])
        except UnresolvedEdge:
            continue
        for i, parities in table.items():
            assert len(set(parities.values())) == 1, (g.format(), i, parities)
        checked += 1
    assert checked >= 100


@pytest.mark.parametrize("prefix", ["t1^-1", "t2 t1^-1", "t1^-2"])
def test_vertical_key_prefix_may_end_in_inverse_letter(ctx2, prefix):
    u = ctx2.element(prefix)
    key = vertical_key_of_edge(u, 1)
    assert key.prefix == u.t and key.prefix[-1] == -1
    assert side_vertical(key, u) is Side.CO
    assert side_vertical(key, multiply(u, ctx2.element("t1"))) is Side.BLOCK
