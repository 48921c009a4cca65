"""Degree of regularity, the generic-coordinates test and the regularity basis."""
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import List, Optional, Sequence, Tuple

from ..algebra import DRL_ORDER, Polynomial, TermOrder, reduce
from ..algebra.orders import monomials_of_degree
from ..errors import UnitIdeal
from ..linalg import rref
from .buchberger import buchberger
from .macaulay import MAX_COLUMNS, _ring_of, build_macaulay

IN_GENERIC_COORDINATES = "InGenericCoordinates"
NOT_DETECTED = "NotDetectedUpToCap"
INFINITE = "infinite-up-to-cap"


@dataclass
class RegularityProfile:
    per_degree_dims: List[Tuple[int, int, int]]
    d_reg: Optional[int]
    cap: int
    quotient_caps: Optional[Tuple[int, ...]] = None
    tops: List[Polynomial] = dc_field(default_factory=list, repr=False)

    @property
    def finite(self) -> bool:
        return self.d_reg is not None

    def to_dict(self):
        return {
            "d_reg": self.d_reg if self.finite else INFINITE,
            "cap": self.cap,
            "per_degree_dims": [list(t) for t in self.per_degree_dims],
            "quotient_caps": list(self.quotient_caps) if self.quotient_caps else None,
        }


def _caps_tuple(caps, n):
    if caps is None:
        return None
    if isinstance(caps, int):
        return (caps,) * n
    caps = tuple(int(c) for c in caps)
    if len(caps) != n:
        raise ValueError("one exponent cap per variable expected")
    return caps


def top_components(F: Sequence[Polynomial], caps=None) -> List[Polynomial]:
    """Highest-degree parts, reduced into the quotient by x_i^caps[i] when given."""
    tops = []
    for f in F:
        if f.is_zero():
            continue
        g = f.truncate(caps) if caps is not None else f
        if g.is_zero():
            continue
        t = g.top_component()
        if caps is not None:
            t = t.truncate(caps)
        if not t.is_zero():
            tops.append(t)
    return tops


def degree_of_regularity(
    F: Sequence[Polynomial],
    cap: int,
    quotient_exponent_caps=None,
    max_columns: int = MAX_COLUMNS,
) -> RegularityProfile:
    """Least d with dim (F^top)_d = dim P_d, checked degree by degree up to ``cap``.

    With exponent caps e_i the ambient ring is F_q[x]/(x_i^e_i): generators
    are first reduced into it and P_d counts monomials with exponents below
    the caps.
    """
    field, n = _ring_of(F)
    caps = _caps_tuple(quotient_exponent_caps, n)
    tops = top_components(F, caps)
    dims = []
    for d in range(0, cap + 1):
        target = sum(1 for _ in monomials_of_degree(n, d, caps)) if caps else comb(n + d - 1, d)
        gens = [t for t in tops if t.degree() <= d]
        if not gens or target == 0:
            rank = 0
        else:
            M = build_macaulay(gens, d, DRL_ORDER, homogeneous=True, caps=caps, max_columns=max_columns)
            rank = rref(M.rows, field.q)[1] if M.rows.size else 0
        dims.append((d, rank, target))
        if rank == target:
            return RegularityProfile(dims, d, cap, caps, tops)
    return RegularityProfile(dims, None, cap, caps, tops)


def binary_iteration_dreg(F: Sequence[Polynomial], cap: int, max_columns: int = MAX_COLUMNS) -> Optional[int]:
    """Square-free iteration for systems whose tops share one degree D.

    Start from the tops modulo (x_1^2, ..., x_n^2), row-reduce, and multiply
    by every variable until the span has C(n, D + d) elements. Returns
    D + d, or None when ``cap`` is reached first.
    """
    field, n = _ring_of(F)
    caps = (2,) * n
    tops = top_components(F, caps)
    if not tops:
        return None
    D = tops[0].degree()
    if any(t.degree() != D for t in tops):
        raise ValueError("all square-free tops must share one degree")
    G = tops
    d = 0
    while D + d <= cap:
        if G:
            M = build_macaulay(G, D + d, DRL_ORDER, homogeneous=True, caps=caps, max_columns=max_columns)
            G = M.echelon()
        if len(G) == comb(n, D + d):
            return D + d
        d += 1
        nxt = []
        for g in G:
            for i in range(n):
                x = Polynomial.variable(field, n, i)
                h = (g * x).truncate(caps)
                if not h.is_zero():
                    nxt.append(h)
        G = nxt
    return None


def generic_coordinates_test(F: Sequence[Polynomial], cap: int, basis: Optional[Sequence[Polynomial]] = None,
                             quotient_exponent_caps=None) -> str:
    """InGenericCoordinates iff d_reg(F) is finite up to ``cap``.

    Raises UnitIdeal when a Groebner basis of F (computed if not given)
    contains a unit.
    """
    if basis is None:
        basis = buchberger(F).basis
    if any(g.is_constant() and not g.is_zero() for g in basis):
        raise UnitIdeal("the system generates the unit ideal")
    prof = degree_of_regularity(F, cap, quotient_exponent_caps)
    return IN_GENERIC_COORDINATES if prof.finite else NOT_DETECTED


def regularity_basis(F: Sequence[Polynomial], d_reg: int, order: TermOrder = DRL_ORDER,
                     max_columns: int = MAX_COLUMNS) -> List[Polynomial]:
    """Row basis of M_{<=d_reg} plus remainders of the generators of larger degree."""
    F = [f for f in F if not f.is_zero()]
    low = [f for f in F if f.degree() <= d_reg]
    high = [f for f in F if f.degree() > d_reg]
    B = build_macaulay(low, d_reg, order, max_columns=max_columns).echelon() if low else []
    for f in high:
        r = reduce(f, B, order) if B else f
        if not r.is_zero():
            B.append(r)
    return B
