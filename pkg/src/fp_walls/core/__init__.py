from .element import (
    IDENTITY,
    Element,
    GroupContext,
    commutator,
    element_of_letter,
    element_of_word,
    from_wt_form,
    grid_word,
    invert,
    multiply,
    multiply_letter,
    power,
    project_vertical,
    sigma_apply,
    smin_length,
    to_s_word,
    to_smin_word,
    to_wt_form,
)
from .words import (
    GenLetter,
    HorizWord,
    Kind,
    T,
    VertWord,
    Word,
    X,
    Y,
    format_horizontal,
    format_vertical,
    format_word,
    invert_word,
    parse_word,
    power_word,
    reduce,
    reduce_codes,
)


__all__ = [
    "IDENTITY",
    "Element",
    "GenLetter",
    "GroupContext",
    "HorizWord",
    "Kind",
    "T",
    "VertWord",
    "Word",
    "X",
    "Y",
    "commutator",
    "element_of_letter",
    "element_of_word",
    "format_horizontal",
    "format_vertical",
    "format_word",
    "from_wt_form",
    "grid_word",
    "invert",
    "invert_word",
    "multiply",
    "multiply_letter",
    "parse_word",
    "power",
    "power_word",
    "project_vertical",
    "reduce",
    "reduce_codes",
    "sigma_apply",
    "smin_length",
    "to_s_word",
    "to_smin_word",
    "to_wt_form",
]
