"""Buchberger's algorithm, the Buchberger criterion and basis interreduction."""
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import List, Optional, Sequence

from ..algebra import DRL_ORDER, Polynomial, TermOrder, coprime, divides, mono_div, mono_lcm, reduce
from ..errors import ZeroInput


@dataclass
class GroebnerResult:
    basis: List[Polynomial]
    term_order: TermOrder
    witness_degree: Optional[int] = None
    is_reduced: bool = True
    s_poly_max_degree: Optional[int] = None
    stats: dict = dc_field(default_factory=dict)

    @property
    def is_unit(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.basis)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder = DRL_ORDER) -> Polynomial:
    lf, cf = f.leading_term(order)
    lg, cg = g.leading_term(order)
    lcm = mono_lcm(lf, lg)
    q = f.q
    return f.shift(mono_div(lcm, lf), pow(cf, -1, q)) - g.shift(mono_div(lcm, lg), pow(cg, -1, q))


def _useful_pairs(G, order):
    lms = [g.leading_monomial(order) for g in G]
    for i, j in combinations(range(len(G)), 2):
        if not coprime(lms[i], lms[j]):
            yield i, j


def is_groebner_basis(G: Sequence[Polynomial], order: TermOrder = DRL_ORDER, generators=None) -> bool:
    """Buchberger criterion on G; with ``generators`` also checks (generators) is inside (G)."""
    G = [g for g in G if not g.is_zero()]
    if not G:
        return generators is None or all(f.is_zero() for f in generators)
    if any(g.is_constant() for g in G):
        return True
    for i, j in _useful_pairs(G, order):
        if not reduce(s_polynomial(G[i], G[j], order), G, order).is_zero():
            return False
    if generators is not None:
        return all(reduce(f, G, order).is_zero() for f in generators)
    return True


def minimalize(G: Sequence[Polynomial], order: TermOrder = DRL_ORDER) -> List[Polynomial]:
    """Keep elements whose leading monomial is not divisible by another's.

    Among equal leading monomials the earliest element wins.
    """
    G = [g for g in G if not g.is_zero()]
    lms = [g.leading_monomial(order) for g in G]
    keep = []
    for i, lm in enumerate(lms):
        dominated = False
        for j, other in enumerate(lms):
            if j == i:
                continue
            if other == lm:
                if j < i:
                    dominated = True
                    break
            elif divides(other, lm):
                dominated = True
                break
        if not dominated:
            keep.append(G[i])
    return keep


def interreduce(G: Sequence[Polynomial], order: TermOrder = DRL_ORDER) -> List[Polynomial]:
    """Reduced form: minimal, monic, no term divisible by another leading monomial.

    Only ideal-preserving when G is already a Groebner basis. Output is sorted by leading monomial, largest first.
    """
    G = minimalize(G, order)
    if any(g.is_constant() for g in G):
        return [Polynomial.constant(G[0].field, G[0].nvars, 1)]
    out = []
    for i, g in enumerate(G):
        rest = G[:i] + G[i + 1:]
        lm, lc = g.leading_term(order)
        tail = g - Polynomial.monomial(g.field, lm, lc)
        if rest and not tail.is_zero():
            tail = reduce(tail, rest, order)
        out.append((tail + Polynomial.monomial(g.field, lm, lc)).monic(order))
    out.sort(key=lambda p: order.key(p.leading_monomial(order)), reverse=True)
    return out


def buchberger(F: Sequence[Polynomial], order: TermOrder = DRL_ORDER) -> GroebnerResult:
    """Reduced Groebner basis by Buchberger's algorithm with the coprime criterion.

    Pairs are processed by smallest lcm degree first. ``s_poly_max_degree``
    is the largest degree of a formed S-polynomial (leading terms cancelled,
    None if no pair was formed); ``stats["lcm_max_degree"]`` is the largest
    lcm degree among those pairs.
    """
    G = [f.monic(order) for f in F if not f.is_zero()]
    if not G:
        raise ZeroInput("Buchberger needs at least one nonzero polynomial")
    if any(g.is_constant() for g in G):
        return GroebnerResult([Polynomial.constant(G[0].field, G[0].nvars, 1)], order, None, True, None)
    lms = [g.leading_monomial(order) for g in G]
    pairs = {(i, j) for i, j in combinations(range(len(G)), 2)}
    max_deg = max_lcm = None
    formed = skipped = 0

    def stats():
        return {"pairs": formed, "skipped": skipped, "lcm_max_degree": max_lcm}

    while pairs:
        i, j = min(pairs, key=lambda p: (sum(mono_lcm(lms[p[0]], lms[p[1]])), p))
        pairs.discard((i, j))
        if coprime(lms[i], lms[j]):
            skipped += 1
            continue
        lcm_deg = sum(mono_lcm(lms[i], lms[j]))
        max_lcm = lcm_deg if max_lcm is None else max(max_lcm, lcm_deg)
        formed += 1
        s = s_polynomial(G[i], G[j], order)
        if not s.is_zero():
            deg = int(s.degree())
            max_deg = deg if max_deg is None else max(max_deg, deg)
        h = reduce(s, G, order)
        if h.is_zero():
            continue
        h = h.monic(order)
        if h.is_constant():
            return GroebnerResult([h], order, None, True, max_deg, stats())
        hl = h.leading_monomial(order)
        k = len(G)
        G.append(h)
        lms.append(hl)
        pairs.update((idx, k) for idx in range(k))
    basis = interreduce(G, order)
    return GroebnerResult(basis, order, None, True, max_deg, stats())
