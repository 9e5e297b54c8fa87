"""Corner-point design matrices, the incidence matrix T and the block rearrangement."""

from loglinkit.design.builder import (
    DesignMatrix,
    build_logistic_design,
    build_loglinear_design,
    expanded_logistic_design,
    matrix_rank,
    parse_dump,
)
from loglinkit.design.incidence import (
    IncidenceMatrix,
    RearrangedDesign,
    incidence_matrix,
    rearrange_blocks,
)
from loglinkit.design.labels import ParameterLabel, parameter_labels

__all__ = [
    "DesignMatrix",
    "IncidenceMatrix",
    "ParameterLabel",
    "RearrangedDesign",
    "build_logistic_design",
    "build_loglinear_design",
    "expanded_logistic_design",
    "incidence_matrix",
    "matrix_rank",
    "parameter_labels",
    "parse_dump",
]
