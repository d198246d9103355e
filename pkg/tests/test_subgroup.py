from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import elements
from fp_walls.cayley import ball
from fp_walls.core import GroupContext, element_of_word, invert, multiply, smin_length
from fp_walls.errors import IndexOutOfRange
from fp_walls.subgroup import (
    AffineQuotient,
    MembershipOracle,
    SubgroupId,
    alpha_support,
    enumerate_subgroup_ball,
    evaluate_witness,
    h_generators,
    h_generators_smin,
)
from fp_walls.types import CertifiedIn, CertifiedOut, Confidence, SearchBudget, StabilizedOut
from fp_walls.walls import VertizontalKey, side, vertizontal_parity


def test_generator_sets_agree(ctx2, ctx3):
    for ctx in (ctx2, ctx3):
        for i in ctx.indices:
            assert h_generators(ctx, i) == h_generators_smin(ctx, i)
            assert len(h_generators(ctx, i)) == 2 * ctx.n


def test_subgroup_id(ctx2):
    assert SubgroupId(2).check(ctx2) == 2
    with pytest.raises(IndexOutOfRange):
        SubgroupId(3).check(ctx2)


@pytest.mark.parametrize("k", range(-5, 6))
def test_level_conjugates_of_t1_are_members(ctx2, oracle2, k):
    for word in (f"y t1^{k} y^-1", f"y^-1 t1^{k} y"):
        g = ctx2.element(word)
        m = oracle2.membership(1, g)
        assert isinstance(m, CertifiedIn)
        assert evaluate_witness(oracle2.generators(1), m.witness) == g


@pytest.mark.parametrize(
    "word, certificate",
    [
        ("y", "phi"),
        ("t1", "alpha-support"),
        ("t2 t1", "alpha-support"),
        ("y t2 y^-1", "alpha-support"),
    ],
)
def test_certified_non_members(ctx2, oracle2, word, certificate):
    m = oracle2.membership(1, ctx2.element(word))
    assert m == CertifiedOut(certificate=certificate)
    assert m.confidence is Confidence.CERTIFIED


@pytest.mark.parametrize("word", ["t2", "x2", "x1 t1^-1", "y x1 y^-1 t1", "t2^3 x2^-2", "y^-1 t1 y t2"])
def test_members(ctx2, oracle2, word):
    assert oracle2.is_member(1, ctx2.element(word)) is True


def test_membership_is_memoized(ctx2, budget):
    oracle = MembershipOracle(ctx2, budget)
    g = ctx2.element("y t1 y^-1 t2")
    first = oracle.membership(1, g)
    second = oracle.membership(1, g)
    assert first == second
    assert oracle.stats["hits"] == 1


def test_membership_checks_the_index(ctx2, oracle2):
    with pytest.raises(IndexOutOfRange):
        oracle2.membership(3, ctx2.element("t1"))


@pytest.fixture(scope="module")
def shallow_oracle(ctx2) -> MembershipOracle:
    return MembershipOracle(ctx2, SearchBudget(depth=12, radius=4))


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_products_of_generators_are_never_certified_out(shallow_oracle, data):
    oracle = shallow_oracle
    i = data.draw(st.sampled_from([1, 2]))
    gens = oracle.generators(i)
    witness = data.draw(st.lists(st.tuples(st.integers(0, len(gens) - 1), st.sampled_from([1, -1])), max_size=5))
    g = evaluate_witness(gens, witness)
    m = oracle.membership(i, g)
    assert not isinstance(m, CertifiedOut)
    if isinstance(m, CertifiedIn):
        assert evaluate_witness(gens, m.witness) == g


def test_alpha_support(ctx2):
    assert alpha_support(ctx2, 1) == {(2, -1), (2, 0), (1, -1), (1, 1)}


def test_quotient_verifies_relators(ctx2, ctx3):
    for ctx in (ctx2, ctx3):
        AffineQuotient(ctx, 2).verify()
        AffineQuotient(ctx, 3).verify()


def test_quotient_never_excludes_generators(ctx2):
    q = AffineQuotient(ctx2, 2)
    for i in ctx2.indices:
        for h in h_generators(ctx2, i):
            assert not q.excludes(i, h)
            assert not q.excludes(i, invert(h))


@settings(max_examples=100)
@given(elements(), elements())
def test_quotient_is_a_homomorphism(a, b):
    q = AffineQuotient(GroupContext(2), 3)
    assert np.array_equal(q.rho(multiply(a, b)), (q.rho(a) @ q.rho(b)) % q.modulus)


def test_coset_signature_is_constant_on_cosets(ctx2, oracle2):
    b = ctx2.element("t1 y x2")
    for h in oracle2.generators(1):
        assert oracle2.coset_signature(1, multiply(b, h)) == oracle2.coset_signature(1, b)


def test_subgroup_ball_stabilizes(ctx2):
    hb = enumerate_subgroup_ball(ctx2, 1, radius=3, depth=20, slack=4)
    assert hb.report.stabilized
    gens = h_generators(ctx2, 1)
    for g, witness in hb.elements.items():
        assert evaluate_witness(gens, list(witness)) == g
    assert ctx2.element("y t1 y^-1") in hb.elements
    assert ctx2.element("t1") not in hb.elements


def test_subgroup_ball_rejects_bad_arguments(ctx2):
    with pytest.raises(ValueError):
        enumerate_subgroup_ball(ctx2, 1, radius=-1, depth=5)


def test_oracle_subgroup_ball_is_cached(ctx2, oracle2):
    first = oracle2.subgroup_ball(2, 3)
    assert oracle2.subgroup_ball(2, 3) is first


@pytest.mark.parametrize("word", ["y t1 y^-1", "x1 t1^-1", "t2 x2", "y^-1 t1^-2 y"])
def test_members_stabilize_the_base_wall(ctx2, oracle2, word):
    h = ctx2.element(word)
    assert oracle2.is_member(1, h) is True
    wall = VertizontalKey(1, ctx2.identity)
    for p in ball(ctx2, 2).order:
        assert side(oracle2, wall, multiply(h, p))[0] is side(oracle2, wall, p)[0]


def test_products_of_members_stay_members(ctx2, oracle2):
    a, b = ctx2.element("y t1 y^-1"), ctx2.element("x2 t1^-1 x1")
    assert oracle2.is_member(1, a) and oracle2.is_member(1, b)
    for g in (multiply(a, b), multiply(b, a), invert(multiply(a, b))):
        assert isinstance(oracle2.membership(1, g), CertifiedIn)


def test_quotient_image_is_a_group(ctx2):
    q = AffineQuotient(ctx2, 2)
    image = q.image(1)
    assert np.identity(ctx2.n + 2, dtype=np.int64).tobytes() in image
    for a in image.values():
        for b in image.values():
            assert ((a @ b) % q.modulus).tobytes() in image


def test_commutator_of_vertical_letters_is_stabilized_out(ctx2, oracle2):
    # x1 commutes with every t_j, so this word evaluates to [t1, t2]. Along it the only E_1
    # crossing is the first letter, which puts [t1, t2] off the side of T_1 that H_1 preserves.
    word = ctx2.parse("t1 x1 t2 t1^-1 t2^-1 x1^-1")
    g = ctx2.element("t1 t2 t1^-1 t2^-1")
    assert element_of_word(word) == g
    assert vertizontal_parity(oracle2, 1, word) == (1, Confidence.CERTIFIED)
    assert smin_length(g) == 4

    budget = SearchBudget(depth=30, max_nodes=50, radius=4, slack=3, expand_margin=1)
    oracle = MembershipOracle(ctx2, budget, quotients=[])
    verdict = oracle.membership(1, g)
    assert isinstance(verdict, StabilizedOut)
    assert verdict.is_member is False
    assert verdict.confidence is Confidence.STABILIZED

    ball = oracle.subgroup_ball(1, 4)
    assert g not in ball.elements
    assert (verdict.radius, verdict.depth, verdict.slack, verdict.stabilized_at) == (
        ball.radius,
        ball.report.depth_reached,
        ball.report.slack,
        ball.report.last_new_depth,
    )


@given(st.integers(min_value=1, max_value=5), st.sampled_from([1, 2]), st.integers(min_value=1, max_value=3))
@settings(max_examples=15, deadline=None)
def test_subgroup_ball_grows_with_depth(ctx2, depth, i, slack):
    smaller = enumerate_subgroup_ball(ctx2, i, radius=3, depth=depth, slack=slack, expand_margin=1)
    larger = enumerate_subgroup_ball(ctx2, i, radius=3, depth=depth + 1, slack=slack, expand_margin=1)
    assert set(smaller.elements) <= set(larger.elements)
    for ball, limit in ((smaller, depth), (larger, depth + 1)):
        report = ball.report
        assert report.depth_reached <= limit
        assert report.last_new_depth <= report.depth_reached
        if report.stabilized and not report.exhausted:
            assert report.depth_reached - report.last_new_depth >= report.slack
        if not report.stabilized:
            assert report.depth_reached == limit


def test_oracle_stats_count_every_call_across_threads(ctx2, budget):
    oracle = MembershipOracle(ctx2, budget)
    words = ["x2", "t1", "y t1 y^-1", "x1 t1^-1", "t2 x2", "y", "t1 t2"] * 6
    with ThreadPoolExecutor(max_workers=4) as pool:
        verdicts = list(pool.map(lambda word: oracle.membership(1, ctx2.element(word)), words))
    assert len(verdicts) == len(words)
    assert sum(oracle.stats.values()) == len(words)
    assert oracle.stats["hits"] >= len(words) - 4 * len(set(words))
