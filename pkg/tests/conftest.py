import pytest
from hypothesis import strategies as st

from fp_walls.core import GroupContext, T, X, Y, element_of_word
from fp_walls.subgroup import MembershipOracle
from fp_walls.types import SearchBudget


@pytest.fixture(scope="session")
def ctx2() -> GroupContext:
    return GroupContext(2)


@pytest.fixture(scope="session")
def ctx3() -> GroupContext:
    return GroupContext(3)


@pytest.fixture(scope="session")
def budget() -> SearchBudget:
    return SearchBudget(depth=20, radius=6)


@pytest.fixture(scope="session")
def oracle2(ctx2, budget) -> MembershipOracle:
    return MembershipOracle(ctx2, budget)


@pytest.fixture(scope="session")
def oracle3(ctx3, budget) -> MembershipOracle:
    return MembershipOracle(ctx3, budget)


def letters(n: int):
    """Strategy over single letters of S for G_n."""
    return st.sampled_from(
        [Y(), Y(-1)] + [f(i, s) for i in range(1, n + 1) for f in (T, X) for s in (1, -1)]
    )


def words(n: int = 2, max_size: int = 10):
    return st.lists(letters(n), max_size=max_size).map(tuple)


def elements(n: int = 2, max_size: int = 10):
    return words(n, max_size).map(element_of_word)
