from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field

from fp_walls.types.config import RunConfig
from fp_walls.types.membership import Confidence


class RelatorCheck(BaseModel):
    relator: str = Field(..., description="Defining relator over S")
    level: int = Field(..., description="Exponent k of the conjugating power y^k")
    rewritten: str = Field(..., description="Reduced level word of the conjugated relator")
    shape: Literal["empty", "commutator", "unrecognized"]
    evaluates_to_identity: bool
    abelian_zero: bool


class KernelPresentation(BaseModel):
    n: int
    level_range: int
    relators: List[RelatorCheck] = Field(default_factory=list)
    verified: bool = Field(..., description="All rewritten relators are commutators or empty")


class StabilizationReport(BaseModel):
    i: int
    radius: int
    depth_reached: int = Field(..., description="Last generator depth expanded")
    slack: int
    last_new_depth: int = Field(..., description="Largest depth at which a new retained element appeared")
    stabilized: bool
    exhausted: bool = Field(..., description="The frontier ran empty before the depth limit")
    elements: int = Field(..., description="Retained elements (length <= radius)")
    visited: int = Field(..., description="All elements reached, retained or not")


class ComponentReport(BaseModel):
    i: int
    radius: int
    vertices: int
    certified: bool = Field(..., description="No Unresolved edge and no StabilizedOut reliance")
    component_e: int = Field(..., description="Size of the component of the identity")
    component_ti: int = Field(..., description="Size of the component of t_i")
    disjoint: bool
    stranded: int = Field(..., description="Vertices in neither tracked component")
    stranded_sample: List[str] = Field(default_factory=list)
    edges_in_Ei: int
    unresolved: int
    stabilized_edges: int


class CoverageReport(BaseModel):
    i: int
    radius: int
    margin: int
    inner_vertices: int
    covered: int
    fraction: float


class FixtureReport(BaseModel):
    i: int
    name: str
    start: str
    word: str
    expected_end: str
    reached_end: str
    expected_side: Literal["block", "co"]
    endpoint_ok: bool
    avoids_Ei: bool
    unresolved: int


class TranslateReport(BaseModel):
    i: int
    translate: str
    edges_checked: int
    violations: List[str] = Field(default_factory=list)


class WallKeyRecord(BaseModel):
    family: Literal["horizontal", "vertical", "vertizontal"]
    i: Optional[int] = None
    j: Optional[int] = None
    rep: Optional[str] = None
    prefix: Optional[str] = None
    base: Optional[str] = None
    label: str


class CrossedRecord(BaseModel):
    position: int
    wall: WallKeyRecord
    sign: int


class WallCrossingRecord(BaseModel):
    path: str
    crossings: List[CrossedRecord] = Field(default_factory=list)
    net: List[Tuple[str, int]] = Field(default_factory=list)
    confidence: Confidence


class OmegaReport(BaseModel):
    g: str
    h: str
    total: int
    vertical: int
    horizontal: int
    vertizontal: Dict[int, int] = Field(default_factory=dict)
    confidence: Confidence
    upper_bound: bool = Field(
        False,
        description="Some vertizontal walls could not be merged or resolved; total is an upper bound",
    )


class CrossingPairRecord(BaseModel):
    a: str
    b: str
    verdict: Literal["crossing", "non_crossing", "unresolved"]
    witnesses: List[str] = Field(default_factory=list)
    radius: Optional[int] = None
    exact: bool = False


class CliqueRecord(BaseModel):
    walls: List[str]
    size: int
    vertical: int
    horizontal: int
    vertizontal: Dict[int, int] = Field(default_factory=dict)
    composition_ok: bool


class CrossingGraphReport(BaseModel):
    n: int
    search_radius: int
    walls: List[str]
    crossing_pairs: List[Tuple[int, int]] = Field(default_factory=list)
    unresolved_pairs: int
    cliques: List[CliqueRecord] = Field(default_factory=list)
    max_clique: int
    bound: int = Field(..., description="The dimension bound 2n+2")
    within_bound: bool
    composition_ok: bool


class VertexRecord(BaseModel):
    element: str
    bits: str
    unresolved: str
    confidence: Confidence


class CubeFragmentRecord(BaseModel):
    radius: int
    walls: List[str]
    vertices: List[VertexRecord]
    crossing: CrossingGraphReport
    bit_violations: int


class ProperRow(BaseModel):
    r: int
    min_omega: int
    mean_omega: float
    samples: int
    confidence: Confidence


class CheckResult(BaseModel):
    name: str
    status: Literal["pass", "degraded", "contradicted", "fail"]
    details: str = ""
    data: Dict[str, Any] = Field(default_factory=dict)


class Artifact(BaseModel):
    """Envelope of every emitted artifact; echoes the run configuration"""
    command: str
    config: RunConfig
    confidence: Confidence
    result: Any = None
