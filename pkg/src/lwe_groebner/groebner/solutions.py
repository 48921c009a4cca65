"""Reading off F_q-rational points from a Groebner basis."""
from typing import List, Optional, Sequence

from ..algebra import LEX_ORDER
from ..errors import NotZeroDimensional, TooLarge
from .buchberger import GroebnerResult, buchberger

MAX_BRANCHES = 1_000_000


def _is_zero_dimensional(basis, n) -> bool:
    pure = set()
    for g in basis:
        lm = g.leading_monomial(LEX_ORDER)
        used = [i for i, x in enumerate(lm) if x]
        if len(used) == 1:
            pure.add(used[0])
    return len(pure) == n


def extract_solutions(result: GroebnerResult, domain_caps: Optional[Sequence[Sequence[int]]] = None) -> List[tuple]:
    """All points of F_q^n on which the basis vanishes.

    The basis is recomputed in LEX order; then x_n, x_{n-1}, ..., x_1 are
    fixed one at a time by trying every field element (or every value of
    ``domain_caps[i]`` when given) against the basis elements that only
    involve already-fixed variables.
    """
    basis = [g for g in result.basis if not g.is_zero()]
    if not basis:
        raise NotZeroDimensional("empty basis describes the whole space")
    if any(g.is_constant() for g in basis):
        return []
    field, n = basis[0].field, basis[0].nvars
    lex = result.basis if result.term_order.kind == "lex" and result.term_order.permutation is None \
        else buchberger(basis, LEX_ORDER).basis
    if any(g.is_constant() for g in lex):
        return []
    if domain_caps is None and not _is_zero_dimensional(lex, n):
        raise NotZeroDimensional("some variable has no pure-power leading monomial")
    candidates = [list(field.elements()) if domain_caps is None else sorted({v % field.q for v in domain_caps[i]})
                  for i in range(n)]

    # bucket basis elements by their smallest-index variable
    buckets = [[] for _ in range(n)]
    for g in lex:
        used = g.variables()
        buckets[used[0] if used else 0].append(g)

    points = []
    budget = [0]

    def descend(k, partial):
        if k < 0:
            points.append(tuple(partial))
            return
        for v in candidates[k]:
            budget[0] += 1
            if budget[0] > MAX_BRANCHES:
                raise TooLarge("back-substitution explores too many branches")
            partial[k] = v
            if all(g.evaluate(partial) == 0 for g in buckets[k]):
                descend(k - 1, partial)
        partial[k] = 0

    descend(n - 1, [0] * n)
    return sorted(points)
