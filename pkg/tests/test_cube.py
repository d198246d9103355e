import pytest

from fp_walls.cayley import ball
from fp_walls.cube import (
    Crossing,
    NonCrossing,
    SideTable,
    collect_walls,
    composition_ok,
    cross_test,
    crossing_graph,
    element_identities,
    non_crossing_fixtures,
    orientation_vectors,
    standard_family,
    vertical_vertizontal_family,
    witness_fixtures,
)
from fp_walls.walls import HorizontalKey, VerticalKey, VertizontalKey, omega, side


def _combinations(oracle, fixture, ctx):
    k1, k2 = fixture.walls
    return {(side(oracle, k1, g)[0], side(oracle, k2, g)[0]) for g in fixture.elements(ctx)}


def test_witness_fixtures_realize_every_side_combination(ctx2, oracle2):
    fixtures = witness_fixtures(ctx2)
    assert len(fixtures) == 13
    for fixture in fixtures:
        assert len(_combinations(oracle2, fixture, ctx2)) == 4, fixture.name


def test_witness_fixtures_rank_three(ctx3, oracle3):
    for fixture in witness_fixtures(ctx3):
        assert len(_combinations(oracle3, fixture, ctx3)) == 4, fixture.name


def test_horizontal_and_shifted_vertizontal_walls_are_nested(ctx2, oracle2):
    for fixture in non_crossing_fixtures(ctx2):
        assert len(_combinations(oracle2, fixture, ctx2)) == 3, fixture.name
        verdict = cross_test(oracle2, *fixture.walls, ball(ctx2, 3))
        assert not isinstance(verdict, Crossing)


def test_element_identities(ctx2):
    for left, right in element_identities(ctx2):
        assert ctx2.element(left) == ctx2.element(right)


def test_same_family_verdicts_are_exact(ctx2, oracle2):
    b = ball(ctx2, 1)
    assert cross_test(oracle2, VerticalKey((), 1), VerticalKey((), 2), b) == NonCrossing(radius=None, exact=True)
    assert cross_test(oracle2, HorizontalKey(()), HorizontalKey((1,)), b) == NonCrossing(radius=None, exact=True)
    table = SideTable.build(oracle2, [VerticalKey((), 1)], b)
    with pytest.raises(ValueError):
        table.cross(0, 0)


def test_vertical_crosses_vertizontal(ctx2, oracle2):
    verdict = cross_test(oracle2, VerticalKey((), 1), VertizontalKey(2, ctx2.identity), ball(ctx2, 2))
    assert isinstance(verdict, Crossing)
    assert len(set(verdict.witnesses)) == 4


def test_composition_bounds(ctx2):
    e, y, t1 = ctx2.identity, ctx2.element("y"), ctx2.element("t1")
    assert composition_ok(standard_family(ctx2))
    assert not composition_ok([VerticalKey((), 1), VerticalKey((), 2)])
    assert not composition_ok([HorizontalKey(()), HorizontalKey((1,))])
    assert not composition_ok([VertizontalKey(1, e), VertizontalKey(1, y), VertizontalKey(1, t1)])
    assert len(vertical_vertizontal_family(ctx2)) == 5


@pytest.mark.parametrize("n_ctx", ["ctx2", "ctx3"])
def test_unit_ball_walls(request, n_ctx):
    ctx = request.getfixturevalue(n_ctx)
    oracle = request.getfixturevalue(n_ctx.replace("ctx", "oracle"))
    registry = collect_walls(oracle, ball(ctx, 1))
    assert len(registry) == 4 * ctx.n + 2
    families = [k.family for k in registry]
    assert families.count("horizontal") == 2
    assert families.count("vertical") == 2 * ctx.n


def test_orientation_bits_follow_edges(ctx2, oracle2):
    registry = collect_walls(oracle2, ball(ctx2, 1))
    fragment = orientation_vectors(oracle2, ball(ctx2, 2), registry)
    assert fragment.bit_violations == []
    record = fragment.record()
    assert len(record.vertices) == len(fragment.table.ball)
    assert all(len(v.bits) == len(registry) for v in record.vertices)
    assert fragment.dot().startswith("graph crossing {")


def test_hamming_distance_is_omega(ctx2, oracle2):
    b = ball(ctx2, 1)
    fragment = orientation_vectors(oracle2, b, collect_walls(oracle2, b))
    assert b.order[0] == ctx2.identity
    for k, g in enumerate(b.order):
        assert fragment.hamming(0, k) == omega(oracle2, ctx2.identity, g).total, g


@pytest.mark.slow
def test_vertical_and_vertizontal_walls_form_a_clique(ctx2, oracle2):
    table = SideTable.build(oracle2, standard_family(ctx2), ball(ctx2, 4))
    graph = crossing_graph(table, ctx2.n)
    report = graph.report
    assert report.max_clique == 2 * ctx2.n + 1
    assert report.within_bound and report.composition_ok
    labels = {frozenset(c.walls) for c in report.cliques if c.size == report.max_clique}
    assert frozenset(k.label for k in vertical_vertizontal_family(ctx2)) in labels
    y_shift = {(a, b): v for (a, b), v in graph.verdicts.items() if {a, b} == {0, 3}}
    assert not any(isinstance(v, Crossing) for v in y_shift.values())


@pytest.mark.slow
def test_clique_scales_with_rank(ctx3, oracle3):
    table = SideTable.build(oracle3, vertical_vertizontal_family(ctx3), ball(ctx3, 4))
    report = crossing_graph(table, ctx3.n).report
    assert report.max_clique == 2 * ctx3.n + 1
    assert report.bound == 2 * ctx3.n + 2
