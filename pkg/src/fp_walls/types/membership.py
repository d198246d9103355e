from enum import Enum
from typing import Annotated, List, Literal, Tuple, Union

from pydantic import BaseModel, Field


class Confidence(str, Enum):
    """Evidence tiers, strongest first"""
    CERTIFIED = "certified"
    STABILIZED = "stabilized"
    UNRESOLVED = "unresolved"

    @property
    def rank(self) -> int:
        return _RANK[self]


_RANK = {Confidence.CERTIFIED: 0, Confidence.STABILIZED: 1, Confidence.UNRESOLVED: 2}


def weakest(*tiers: Confidence) -> Confidence:
    return max(tiers, key=lambda c: c.rank, default=Confidence.CERTIFIED)


class CertifiedIn(BaseModel):
    verdict: Literal["certified_in"] = "certified_in"
    witness: List[Tuple[int, int]] = Field(
        ...,
        description="Product of generators as (generator index, sign) pairs, left to right",
    )

    @property
    def is_member(self) -> bool:
        return True

    @property
    def confidence(self) -> Confidence:
        return Confidence.CERTIFIED


class CertifiedOut(BaseModel):
    verdict: Literal["certified_out"] = "certified_out"
    certificate: str = Field(
        ...,
        description="Name of the invariant of H_i the element violates",
    )

    @property
    def is_member(self) -> bool:
        return False

    @property
    def confidence(self) -> Confidence:
        return Confidence.CERTIFIED


class StabilizedOut(BaseModel):
    verdict: Literal["stabilized_out"] = "stabilized_out"
    radius: int = Field(..., description="Radius of the enumerated subgroup ball")
    depth: int = Field(..., description="Generator depth reached by the enumeration")
    slack: int = Field(..., description="Stabilization slack")
    stabilized_at: int = Field(..., description="Last depth that produced a new retained element")

    @property
    def is_member(self) -> bool:
        return False

    @property
    def confidence(self) -> Confidence:
        return Confidence.STABILIZED


class Unknown(BaseModel):
    verdict: Literal["unknown"] = "unknown"
    depth: int = Field(..., description="Positive search depth used")
    nodes: int = Field(..., description="Nodes expanded by the positive search")

    @property
    def is_member(self) -> None:
        return None

    @property
    def confidence(self) -> Confidence:
        return Confidence.UNRESOLVED


Membership3 = Annotated[
    Union[
        CertifiedIn,
        CertifiedOut,
        StabilizedOut,
        Unknown,
    ],
    Field(discriminator="verdict")
]


class MembershipRecord(BaseModel):
    i: int = Field(..., description="Index of the subgroup H_i")
    element: str = Field(..., description="Queried element in tw-form")
    membership: Membership3
    budget: dict = Field(default_factory=dict, description="Budget the verdict was computed with")
