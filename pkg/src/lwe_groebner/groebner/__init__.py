"""Groebner engines, regularity measurements and solution readout."""
from .buchberger import (
    GroebnerResult, buchberger, interreduce, is_groebner_basis, minimalize, s_polynomial,
)
from .engines import (
    NotYet, lazard_solve, macaulay_bound, refined_solve, refined_solving_degree, system_macaulay_bound,
)
from .macaulay import MAX_COLUMNS, MacaulayMatrix, build_macaulay, count_columns, vector_to_polynomial
from .regularity import (
    IN_GENERIC_COORDINATES, INFINITE, NOT_DETECTED, RegularityProfile, binary_iteration_dreg,
    degree_of_regularity, generic_coordinates_test, regularity_basis, top_components,
)
from .solutions import extract_solutions

__all__ = [
    "GroebnerResult", "buchberger", "interreduce", "is_groebner_basis", "minimalize", "s_polynomial",
    "NotYet", "lazard_solve", "macaulay_bound", "refined_solve", "refined_solving_degree",
    "system_macaulay_bound", "MAX_COLUMNS", "MacaulayMatrix", "build_macaulay", "count_columns",
    "vector_to_polynomial", "IN_GENERIC_COORDINATES", "INFINITE", "NOT_DETECTED", "RegularityProfile",
    "binary_iteration_dreg", "degree_of_regularity", "generic_coordinates_test", "regularity_basis",
    "top_components", "extract_solutions",
]
