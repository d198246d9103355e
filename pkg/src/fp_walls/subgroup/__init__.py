from .generators import evaluate_witness, h_generators, h_generators_smin
from .oracle import (
    MembershipOracle,
    SubgroupBall,
    SubgroupId,
    alpha_lattice,
    alpha_support,
    enumerate_subgroup_ball,
)
from .quotient import AffineQuotient, QuotientTest


__all__ = [
    "AffineQuotient",
    "MembershipOracle",
    "QuotientTest",
    "SubgroupBall",
    "SubgroupId",
    "alpha_lattice",
    "alpha_support",
    "enumerate_subgroup_ball",
    "evaluate_witness",
    "h_generators",
    "h_generators_smin",
]
