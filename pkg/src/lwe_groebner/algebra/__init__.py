from .field import PrimeField, field_inv, is_prime
from .orders import (
    DRL,
    DRL_ORDER,
    LEX,
    LEX_ORDER,
    Monomial,
    TermOrder,
    compare_monomials,
    coprime,
    divides,
    mono_div,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
    monomials_up_to,
    sorted_monomials,
)
from .polynomial import (
    NEG_INF,
    Polynomial,
    from_json_terms,
    homogenize,
    multivariate_divide,
    parse_polynomial,
    reduce,
    system_from_json,
    system_to_json,
    to_json_terms,
    to_text,
    top_component,
)

__all__ = [
    "DRL", "DRL_ORDER", "LEX", "LEX_ORDER", "Monomial", "NEG_INF", "Polynomial", "PrimeField",
    "TermOrder", "compare_monomials", "coprime", "divides", "field_inv", "from_json_terms", "homogenize", "is_prime",
    "mono_div", "mono_lcm", "mono_mul", "monomials_of_degree", "monomials_up_to", "multivariate_divide", "parse_polynomial", "reduce", "sorted_monomials",
    "system_from_json", "system_to_json", "to_json_terms", "to_text", "top_component",
]
