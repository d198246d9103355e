from .crossing import (
    Crossing,
    CrossingGraph,
    CrossingVerdict,
    NonCrossing,
    SideTable,
    Unresolved,
    clique_record,
    collect_walls,
    composition,
    composition_ok,
    cross_test,
    crossing_graph,
)
from .fixtures import (
    WitnessFixture,
    element_identities,
    non_crossing_fixtures,
    standard_family,
    vertical_vertizontal_family,
    witness_fixtures,
)
from .fragment import CubeFragment, orientation_vectors


__all__ = [
    "Crossing",
    "CrossingGraph",
    "CrossingVerdict",
    "CubeFragment",
    "NonCrossing",
    "SideTable",
    "Unresolved",
    "WitnessFixture",
    "clique_record",
    "collect_walls",
    "composition",
    "composition_ok",
    "cross_test",
    "crossing_graph",
    "element_identities",
    "non_crossing_fixtures",
    "orientation_vectors",
    "standard_family",
    "vertical_vertizontal_family",
    "witness_fixtures",
]
