from fp_walls.core import Element, GroupContext, element_of_word, multiply, invert
from fp_walls.errors import FPError
from fp_walls.loader import ConfigLoader
from fp_walls.subgroup import MembershipOracle
from fp_walls.types import RunConfig, SearchBudget


__all__ = [
    "ConfigLoader",
    "Element",
    "FPError",
    "GroupContext",
    "MembershipOracle",
    "RunConfig",
    "SearchBudget",
    "element_of_word",
    "invert",
    "multiply",
]
