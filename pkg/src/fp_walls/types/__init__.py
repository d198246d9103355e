from .config import Caps, OutputConfig, Radii, RunConfig, SearchBudget
from .membership import (
    CertifiedIn,
    CertifiedOut,
    Confidence,
    Membership3,
    MembershipRecord,
    StabilizedOut,
    Unknown,
    weakest,
)
from .reports import (
    Artifact,
    CheckResult,
    CliqueRecord,
    ComponentReport,
    CoverageReport,
    CrossedRecord,
    CrossingGraphReport,
    CrossingPairRecord,
    CubeFragmentRecord,
    FixtureReport,
    KernelPresentation,
    OmegaReport,
    ProperRow,
    RelatorCheck,
    StabilizationReport,
    TranslateReport,
    VertexRecord,
    WallCrossingRecord,
    WallKeyRecord,
)


__all__ = [
    "Artifact",
    "Caps",
    "CertifiedIn",
    "CertifiedOut",
    "CheckResult",
    "CliqueRecord",
    "ComponentReport",
    "Confidence",
    "CoverageReport",
    "CrossedRecord",
    "CrossingGraphReport",
    "CrossingPairRecord",
    "CubeFragmentRecord",
    "FixtureReport",
    "KernelPresentation",
    "Membership3",
    "MembershipRecord",
    "OmegaReport",
    "OutputConfig",
    "ProperRow",
    "Radii",
    "RelatorCheck",
    "RunConfig",
    "SearchBudget",
    "StabilizationReport",
    "StabilizedOut",
    "TranslateReport",
    "Unknown",
    "VertexRecord",
    "WallCrossingRecord",
    "WallKeyRecord",
    "weakest",
]
