from .crossing import (
    WallCrossing,
    WallCrossingReport,
    WallRegistry,
    keys_of_edge,
    omega,
    walls_crossed,
)
from .keys import (
    HorizontalKey,
    VerticalKey,
    VertizontalKey,
    WallKey,
    horizontal_key_of_edge,
    parse_wall_spec,
    vertical_key_of_edge,
    vertizontal_key_of_edge,
)
from .sides import (
    Side,
    separates,
    side,
    side_horizontal,
    side_vertical,
    side_vertizontal,
    vertizontal_parity,
)


__all__ = [
    "HorizontalKey",
    "Side",
    "VerticalKey",
    "VertizontalKey",
    "WallCrossing",
    "WallCrossingReport",
    "WallKey",
    "WallRegistry",
    "horizontal_key_of_edge",
    "keys_of_edge",
    "omega",
    "parse_wall_spec",
    "separates",
    "side",
    "side_horizontal",
    "side_vertical",
    "side_vertizontal",
    "vertical_key_of_edge",
    "vertizontal_key_of_edge",
    "vertizontal_parity",
    "walls_crossed",
]
