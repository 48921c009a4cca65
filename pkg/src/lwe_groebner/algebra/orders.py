"""Monomials (exponent tuples) and the DRL / LEX term orders."""
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Optional, Sequence, Tuple

from ..errors import ArityMismatch

Monomial = Tuple[int, ...]

DRL = "drl"
LEX = "lex"


@dataclass(frozen=True)
class TermOrder:
    """Term order on exponent tuples.

    ``permutation`` lists variable indices from most to least significant;
    by default x1 > x2 > ... > xn. Under DRL the last listed variable is the
    smallest, so a homogenizing variable appended last is DRL-smallest.
    """

    kind: str = DRL
    permutation: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in (DRL, LEX):
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.permutation is not None:
            object.__setattr__(self, "permutation", tuple(self.permutation))

    @property
    def degree_compatible(self) -> bool:
        return self.kind == DRL

    def _arrange(self, e: Monomial) -> Monomial:
        if self.permutation is None:
            return e
        return tuple(e[i] for i in self.permutation)

    def key(self, e: Monomial):
        """Sort key: larger key means larger monomial."""
        e = self._arrange(e)
        if self.kind == LEX:
            return e
        return (sum(e), tuple(-x for x in reversed(e)))

    def extended(self) -> "TermOrder":
        """Order on one more variable (appended last and smallest)."""
        if self.permutation is None:
            return self
        return TermOrder(self.kind, self.permutation + (len(self.permutation),))

    def restricted(self, drop: int) -> "TermOrder":
        if self.permutation is None:
            return self
        perm = tuple(i - (i > drop) for i in self.permutation if i != drop)
        return TermOrder(self.kind, perm)


DRL_ORDER = TermOrder(DRL)
LEX_ORDER = TermOrder(LEX)


def compare_monomials(a: Sequence[int], b: Sequence[int], order: TermOrder = DRL_ORDER) -> int:
    """Return 1 if a > b, -1 if a < b and 0 if equal."""
    if len(a) != len(b):
        raise ArityMismatch(f"monomials in {len(a)} and {len(b)} variables")
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    return (ka > kb) - (ka < kb)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def monomials_of_degree(n: int, d: int, caps: Optional[Sequence[int]] = None) -> Iterator[Monomial]:
    """All exponent tuples in n variables of total degree d.

    With ``caps`` only exponents e_i < caps[i] are produced.
    """
    if d < 0:
        return
    if n == 0:
        if d == 0:
            yield ()
        return
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        if caps is not None and any(x >= c for x, c in zip(e, caps)):
            continue
        yield tuple(e)


def monomials_up_to(n: int, d: int, caps=None):
    for k in range(d + 1):
        yield from monomials_of_degree(n, k, caps)


def sorted_monomials(monos, order: TermOrder = DRL_ORDER, descending: bool = True):
    return sorted(monos, key=order.key, reverse=descending)
