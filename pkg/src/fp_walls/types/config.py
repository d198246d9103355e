from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator


class SearchBudget(BaseModel):
    """Budgets of the H_i membership oracle"""
    depth: int = Field(
        20,
        ge=1,
        description="Maximal number of generator factors peeled off by the positive search (L)",
    )
    max_nodes: int = Field(
        4000,
        ge=1,
        description="Maximal number of expanded nodes per positive search",
    )
    radius: int = Field(
        6,
        ge=0,
        description="Radius of the subgroup ball consulted for StabilizedOut verdicts",
    )
    slack: int = Field(
        4,
        ge=1,
        description="Depth increments without a new retained element before enumeration counts as stabilized",
    )
    expand_margin: int = Field(
        2,
        ge=0,
        description="Subgroup enumeration expands elements up to radius + expand_margin",
    )
    max_elements: int = Field(
        200_000,
        ge=1,
        description="Cap on the number of elements visited by subgroup enumeration",
    )

    def covers(self, other: "SearchBudget") -> bool:
        """True when every knob of self is at least as generous as other"""
        return all(getattr(self, name) >= getattr(other, name) for name in type(self).model_fields)


class Radii(BaseModel):
    components: int = Field(6, ge=0, description="Ball radius of separation runs")
    counting: int = Field(8, ge=0, description="Ball radius of counting-only runs")
    coverage_margin: int = Field(3, ge=0, description="Inner-ball margin for coverage fractions")
    crossing_walls: int = Field(2, ge=0, description="Radius of the ball whose edges provide walls for crossing runs")
    crossing_search: int = Field(4, ge=0, description="Radius of the ball scanned for crossing witnesses")
    scaling_walls: int = Field(2, ge=0, description="Radius of the ball whose edges provide walls for the n=3 scaling run")
    properness: int = Field(6, ge=0, description="Largest sphere radius of the properness scan")
    parity: int = Field(6, ge=0, description="Ball radius for parity path-independence samples")
    subgroup: int = Field(6, ge=0, description="Radius of H_i enumeration")


class OutputConfig(BaseModel):
    format: Literal["json", "csv", "dot", "text"] = Field(
        "text",
        description="Artifact format",
    )
    out: Optional[str] = Field(
        None,
        description="Output path; stdout when unset",
    )


class Caps(BaseModel):
    vertices: int = Field(
        2_000_000,
        ge=1,
        description="Maximal number of ball vertices before a run aborts",
    )


class RunConfig(BaseModel):
    n: int = Field(2, description="Rank parameter of G_n")
    radii: Radii = Field(default_factory=Radii, description="Radii per analysis")
    budget: SearchBudget = Field(default_factory=SearchBudget, description="Oracle budgets")
    output: OutputConfig = Field(default_factory=OutputConfig, description="Artifact output")
    seed: int = Field(0, description="Seed of every randomized run")
    jobs: int = Field(1, ge=1, description="Worker processes for batch computations")
    samples: int = Field(200, ge=1, description="Random samples per sampled check")
    caps: Caps = Field(default_factory=Caps, description="Resource caps")

    @field_validator("n")
    @classmethod
    def check_rank(cls, v: int) -> int:
        if v < 2:
            raise ValueError(f"n must be at least 2, got {v}")
        return v
